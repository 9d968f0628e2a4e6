#pragma once

#include <string>

#include "solvline/orders.hpp"
#include "solvline/wreath.hpp"

namespace solvline {

/// Canonical key of one lamination leaf: the class of configurations whose
/// part strictly above `level` equals `tail` (the support component of the
/// level's lamp through any member). Keys are canonical for every tag: a
/// Min-order caller reflects the degrees of its configurations before keying,
/// which carries its lamination onto the Max one of the same sign, so only
/// the sign convention is consulted here.
///
/// Invariant: tail has no term of degree <= level.
struct Leaf {
  long long level = 0;
  LaurentPoly tail;

  Leaf() = default;
  Leaf(long long level_, LaurentPoly tail_);

  bool operator==(const Leaf& other) const {
    return level == other.level && tail == other.tail;
  }
  bool operator!=(const Leaf& other) const { return !(*this == other); }
  bool operator<(const Leaf& other) const {  // structural, for containers
    if (level != other.level) return level < other.level;
    return tail < other.tail;
  }
  std::string str() const;
};

/// Nodes of the directed tree are the leaves themselves; the tree order is
/// leaf inclusion.
using TreeNode = Leaf;

enum class LeafRelation { Equal, Inside, Contains, DisjointLeft, DisjointRight };

std::string to_string(LeafRelation r);

/// Key of the leaf through P at the given level.
Leaf leaf_of(long long level, const LaurentPoly& p);

/// Membership of a configuration in a leaf.
bool leaf_contains(const Leaf& l, const LaurentPoly& q);

/// Five-way non-crossing relation. The tag decides only the side of disjoint
/// pairs; Min tags are evaluated through the degree reflection.
LeafRelation relate(const Leaf& l1, const Leaf& l2, OrderTag tag = OrderTag::MaxPlus);

/// Image leaf under the group action; equivariant with multiplication.
Leaf act_leaf(const WreathElement& e, const Leaf& l);

/// Horograding of the lamination: the level.
long long hor(const Leaf& l);

/// The smallest leaf strictly containing v (level rises by one).
TreeNode parent(const TreeNode& v);

/// Smallest common upper bound in the inclusion order.
TreeNode join(const TreeNode& v, const TreeNode& w);

/// Simplicial horograding based at `base`:
/// d(base, base^w) - d(v, base^w) with d the level distance along arcs.
long long tree_horograding(const TreeNode& v, const TreeNode& base);

/// Grading of the quotient by the lamp subgroup: constant on lamp orbits,
/// shifts by the element's shift.
long long quotient_by_L(const TreeNode& v);

/// Dedekind-style boundary point of the ordered configuration set: either a
/// configuration itself or the supremum/infimum of a leaf.
struct Cut {
  enum class Kind { Config, LeafSup, LeafInf };
  Kind kind = Kind::Config;
  LaurentPoly config;
  Leaf leaf;

  static Cut at_config(LaurentPoly p);
  static Cut leaf_sup(Leaf l);
  static Cut leaf_inf(Leaf l);
  std::string str() const;
};

/// Total order on cuts extending compare on configurations. Sup cuts are not
/// attained; a sup and an inf compare Equal exactly when the two leaves are
/// same-level neighbors with no configuration in between.
Ordering compare_cut(const Cut& c1, const Cut& c2, OrderTag tag = OrderTag::MaxPlus);

/// hor of the smallest base-chain leaf whose closure contains P, for P on the
/// positive side of the base leaf: max(deg P, 0). Throws if P lies in the
/// base leaf or on the wrong side.
long long germ_plus(const LaurentPoly& p);
/// Mirror image on the negative side.
long long germ_minus(const LaurentPoly& p);

/// Smallest leaf containing both the base leaf and its image under e^{-1};
/// germ equivariance holds outside its closure.
Leaf germ_bound(const WreathElement& e);

/// For a nonidentity lamp element, an element h from the generators and their
/// lamp conjugates with h^{-1}.p < gL^n.p < h.p for all n. The certificate is
/// a leaf containing the whole gL-orbit of p that h maps off itself.
/// Throws std::invalid_argument when shift != 0 or gL is the identity.
WreathElement domination_certificate(const WreathElement& gL, const LaurentPoly& p);

/// The leaf used by domination_certificate to bound the orbit of p.
Leaf domination_bounding_leaf(const WreathElement& gL, const LaurentPoly& p);

}  // namespace solvline

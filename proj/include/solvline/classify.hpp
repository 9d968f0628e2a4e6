#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvline/lamination.hpp"
#include "solvline/orders.hpp"
#include "solvline/pl.hpp"
#include "solvline/wreath.hpp"

namespace solvline {

enum class LabelKind {
  Cyclic,
  Translations,
  NonAbelianAffine,
  PlanteLike,
  Reducible,
  Inconclusive
};

/// Semi-conjugacy class label. Payload fields are meaningful per kind:
/// Translations carries the reduced integer offset ratio, NonAbelianAffine the
/// slope and lamp direction, PlanteLike the order tag, Inconclusive the depth
/// at which the verification stopped.
struct ClassLabel {
  LabelKind kind = LabelKind::Inconclusive;
  Rat lambda = 0;
  int lamp_sign = 0;
  Int ratio_a = 0, ratio_b = 0;
  OrderTag tag = OrderTag::MaxPlus;
  std::size_t depth = 0;

  static ClassLabel cyclic();
  static ClassLabel translations(const Rat& alpha, const Rat& beta);
  static ClassLabel non_abelian_affine(Rat lambda, int lamp_sign);
  static ClassLabel plante_like(OrderTag tag);
  static ClassLabel reducible();
  static ClassLabel inconclusive(std::size_t depth);

  bool operator==(const ClassLabel& other) const;
  bool operator!=(const ClassLabel& other) const { return !(*this == other); }
  bool is_definite() const { return kind != LabelKind::Inconclusive; }
  std::string str() const;
};

struct AffineClassification {
  ClassLabel label;
  std::optional<AffineMap> witness;
};

/// Constructive classification of the affine pair (h0, g) up to positive
/// affine conjugacy. The returned witness conjugates onto the normal form and
/// is verified exactly before being returned. Throws std::invalid_argument
/// when the pair violates the lamp commutation relations.
AffineClassification classify_affine(const AffineMap& h0, const AffineMap& g);

enum class ElementType { Identity, ExpandingHomothety, ContractingHomothety, TotallyBounded };

std::string to_string(ElementType t);

/// Dynamical type of a group element in the laminar action for the tag.
ElementType element_type(const WreathElement& e, OrderTag tag);

/// Verified-to-depth classification of a PL pair (g, h0). Affine inputs take
/// the exact affine path; otherwise the decision follows the fixed-point and
/// nesting structure of the conjugates g^n h0 g^-n for |n| <= depth, sampled
/// at breakpoints, with Inconclusive as the honest fallback.
ClassLabel classify_pl(const PLMap& g, const PLMap& h0, std::size_t depth);

/// Result of mapping one level's lamp words over a deep leaf: the image
/// leaves and the disjointness verdict. `exhaustive` reports whether every
/// pair was related individually or large instances used key distinctness
/// plus a deterministic pair sample.
struct DisjointnessReport {
  long long level = 0;
  std::vector<Leaf> leaves;
  std::size_t pairs_checked = 0;
  bool exhaustive = true;
  bool all_disjoint = false;
};

/// For every tuple (i_0..i_{n-1}) in {1..N}^n forms the lamp word with
/// exponent i_j at position -j and maps the depth-(n+1) central leaf; checks
/// the images are pairwise disjoint.
DisjointnessReport disjointness_check(std::size_t N, std::size_t n, OrderTag tag);

/// ((1-eps)^(2N+2) * N * lambda)^n, exact. Requires 0 <= eps < 1, lambda > 0.
Rat c1_growth_predicate(const Rat& lambda, std::size_t N, const Rat& eps, std::size_t n);

}  // namespace solvline

#include "solvline/lamination.hpp"

#include <stdexcept>

namespace solvline {

Leaf::Leaf(long long level_, LaurentPoly tail_) : level(level_), tail(std::move(tail_)) {
  if (!tail.is_zero() && tail.low_degree() <= level)
    throw std::invalid_argument("Leaf tail must be supported strictly above its level");
}

std::string Leaf::str() const {
  return "Leaf(" + std::to_string(level) + ", " + tail.str() + ")";
}

std::string to_string(LeafRelation r) {
  switch (r) {
    case LeafRelation::Equal: return "Equal";
    case LeafRelation::Inside: return "Inside";
    case LeafRelation::Contains: return "Contains";
    case LeafRelation::DisjointLeft: return "DisjointLeft";
    case LeafRelation::DisjointRight: return "DisjointRight";
  }
  return "?";
}

Leaf leaf_of(long long level, const LaurentPoly& p) { return Leaf(level, p.part_above(level)); }

bool leaf_contains(const Leaf& l, const LaurentPoly& q) {
  return q.part_above(l.level) == l.tail;
}

namespace {

// Leaf keys are canonical for every tag: a Min-order caller reflects degrees
// of its configurations before keying, which identifies its lamination with
// the Max one of the same sign. Only the sign convention reaches this module.
OrderTag side_tag(OrderTag tag) {
  return is_plus(tag) ? OrderTag::MaxPlus : OrderTag::MaxMinus;
}

// Disjoint sides follow the member order: the extremal disagreement of the
// tails sits above both levels, so it decides every member comparison at once.
LeafRelation relate_max(const Leaf& l1, const Leaf& l2, OrderTag tag) {
  if (l1 == l2) return LeafRelation::Equal;
  if (l1.level <= l2.level && l1.tail.part_above(l2.level) == l2.tail)
    return LeafRelation::Inside;
  if (l2.level <= l1.level && l2.tail.part_above(l1.level) == l1.tail)
    return LeafRelation::Contains;
  Ordering side = compare(l1.tail, l2.tail, tag);
  return side == Ordering::Less ? LeafRelation::DisjointLeft : LeafRelation::DisjointRight;
}

}  // namespace

LeafRelation relate(const Leaf& l1, const Leaf& l2, OrderTag tag) {
  return relate_max(l1, l2, side_tag(tag));
}

Leaf act_leaf(const WreathElement& e, const Leaf& l) {
  // The tail itself is a member representative of its leaf.
  return leaf_of(l.level + e.shift, act_config(e, l.tail));
}

long long hor(const Leaf& l) { return l.level; }

TreeNode parent(const TreeNode& v) { return leaf_of(v.level + 1, v.tail); }

TreeNode join(const TreeNode& v, const TreeNode& w) {
  long long k = std::max(v.level, w.level);
  LaurentPoly diff = v.tail - w.tail;
  if (!diff.is_zero()) k = std::max(k, diff.top_degree());
  return leaf_of(k, v.tail);
}

long long tree_horograding(const TreeNode& v, const TreeNode& base) {
  TreeNode meet = join(base, v);
  long long d_base = meet.level - base.level;
  long long d_v = meet.level - v.level;
  return d_base - d_v;
}

long long quotient_by_L(const TreeNode& v) { return v.level; }

Cut Cut::at_config(LaurentPoly p) {
  Cut c;
  c.kind = Kind::Config;
  c.config = std::move(p);
  return c;
}

Cut Cut::leaf_sup(Leaf l) {
  Cut c;
  c.kind = Kind::LeafSup;
  c.leaf = std::move(l);
  return c;
}

Cut Cut::leaf_inf(Leaf l) {
  Cut c;
  c.kind = Kind::LeafInf;
  c.leaf = std::move(l);
  return c;
}

std::string Cut::str() const {
  switch (kind) {
    case Kind::Config: return "Config(" + config.str() + ")";
    case Kind::LeafSup: return "Sup(" + leaf.str() + ")";
    case Kind::LeafInf: return "Inf(" + leaf.str() + ")";
  }
  return "?";
}

namespace {

// Two same-level leaves whose tails differ by the order's positive unit at
// the next degree bound each other with no configuration in between, so the
// left sup equals the right inf.
bool adjacent_gap_empty(const Leaf& left, const Leaf& right, OrderTag tag) {
  if (left.level != right.level) return false;
  Int unit = is_plus(tag) ? 1 : -1;
  return right.tail - left.tail == LaurentPoly::monomial(left.level + 1, unit);
}

Ordering compare_cut_max(const Cut& c1, const Cut& c2, OrderTag tag) {
  using K = Cut::Kind;
  if (c1.kind == K::Config && c2.kind == K::Config)
    return compare(c1.config, c2.config, tag);

  if (c1.kind == K::Config) {
    LaurentPoly part = c1.config.part_above(c2.leaf.level);
    Ordering rel = compare(part, c2.leaf.tail, tag);
    if (c2.kind == K::LeafSup)
      return rel == Ordering::Greater ? Ordering::Greater : Ordering::Less;
    return rel == Ordering::Less ? Ordering::Less : Ordering::Greater;
  }
  if (c2.kind == K::Config) return flip(compare_cut_max(c2, c1, tag));

  LeafRelation rel = relate(c1.leaf, c2.leaf, tag);
  if (c1.kind == K::LeafSup && c2.kind == K::LeafSup) {
    switch (rel) {
      case LeafRelation::Equal: return Ordering::Equal;
      case LeafRelation::Inside: return Ordering::Less;
      case LeafRelation::Contains: return Ordering::Greater;
      case LeafRelation::DisjointLeft: return Ordering::Less;
      case LeafRelation::DisjointRight: return Ordering::Greater;
    }
  }
  if (c1.kind == K::LeafInf && c2.kind == K::LeafInf) {
    switch (rel) {
      case LeafRelation::Equal: return Ordering::Equal;
      case LeafRelation::Inside: return Ordering::Greater;
      case LeafRelation::Contains: return Ordering::Less;
      case LeafRelation::DisjointLeft: return Ordering::Less;
      case LeafRelation::DisjointRight: return Ordering::Greater;
    }
  }
  if (c1.kind == K::LeafSup && c2.kind == K::LeafInf) {
    if (rel == LeafRelation::DisjointLeft)
      return adjacent_gap_empty(c1.leaf, c2.leaf, tag) ? Ordering::Equal : Ordering::Less;
    return Ordering::Greater;  // overlap or right-disjoint: sup exceeds inf
  }
  // LeafInf vs LeafSup
  if (rel == LeafRelation::DisjointRight)
    return adjacent_gap_empty(c2.leaf, c1.leaf, tag) ? Ordering::Equal : Ordering::Greater;
  return Ordering::Less;
}

}  // namespace

Ordering compare_cut(const Cut& c1, const Cut& c2, OrderTag tag) {
  return compare_cut_max(c1, c2, is_plus(tag) ? OrderTag::MaxPlus : OrderTag::MaxMinus);
}

long long germ_plus(const LaurentPoly& p) {
  if (p.is_zero() || p.top_degree() < 1)
    throw std::invalid_argument("germ_plus: configuration lies in the base leaf");
  if (sign(p, OrderTag::MaxPlus) != Sign::Pos)
    throw std::invalid_argument("germ_plus: configuration is not on the positive side");
  return p.top_degree();
}

long long germ_minus(const LaurentPoly& p) {
  if (p.is_zero() || p.top_degree() < 1)
    throw std::invalid_argument("germ_minus: configuration lies in the base leaf");
  if (sign(p, OrderTag::MaxPlus) != Sign::Neg)
    throw std::invalid_argument("germ_minus: configuration is not on the negative side");
  return p.top_degree();
}

Leaf germ_bound(const WreathElement& e) {
  Leaf base = Leaf(0, LaurentPoly());
  return join(base, act_leaf(inv(e), base));
}

Leaf domination_bounding_leaf(const WreathElement& gL, const LaurentPoly& p) {
  if (gL.shift != 0)
    throw std::invalid_argument("domination: element is not in the lamp subgroup (shift != 0)");
  if (gL.lamp.is_zero())
    throw std::invalid_argument("domination: element is the identity");
  // The gL-orbit of p is {p + n*lamp}; every point keeps the same part above
  // the lamp's top degree, so this leaf contains the whole orbit.
  return leaf_of(gL.lamp.top_degree(), p);
}

WreathElement domination_certificate(const WreathElement& gL, const LaurentPoly& p) {
  Leaf l0 = domination_bounding_leaf(gL, p);
  std::vector<WreathElement> candidates = {gen_g(), inv(gen_g()), gen_h0(), inv(gen_h0())};
  std::vector<WreathElement> conjugated;
  for (const WreathElement& s : candidates) {
    conjugated.push_back(conj(s, gL));
    conjugated.push_back(conj(s, inv(gL)));
  }
  candidates.insert(candidates.end(), conjugated.begin(), conjugated.end());
  for (const WreathElement& h : candidates) {
    LeafRelation rel = relate(act_leaf(h, l0), l0);
    if (rel == LeafRelation::DisjointRight) return h;
    if (rel == LeafRelation::DisjointLeft) return inv(h);
  }
  throw std::logic_error("domination_certificate: no candidate moved the bounding leaf off itself");
}

}  // namespace solvline

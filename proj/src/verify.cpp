#include "solvline/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "solvline/classify.hpp"
#include "solvline/counterexample.hpp"
#include "solvline/gen.hpp"
#include "solvline/lamination.hpp"
#include "solvline/orders.hpp"
#include "solvline/realization.hpp"
#include "solvline/wreath.hpp"

namespace solvline {

namespace {

constexpr OrderTag kAllTags[] = {OrderTag::MaxPlus, OrderTag::MaxMinus, OrderTag::MinPlus,
                                 OrderTag::MinMinus};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

PropertyResult make_result(const std::string& name, std::size_t samples, bool pass,
                           const Timer& t, std::string detail = {}) {
  return PropertyResult{name, samples, pass, t.millis(), std::move(detail)};
}

}  // namespace

PropertyResult check_wreath_associativity(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    WreathElement a = gen.element(), b = gen.element(), c = gen.element();
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      return make_result("wreath.associativity", i + 1, false, t,
                         a.str() + " " + b.str() + " " + c.str());
  }
  return make_result("wreath.associativity", samples, true, t);
}

PropertyResult check_presentation(long long range) {
  Timer t;
  std::size_t samples = 0;
  for (long long n = -range; n <= range; ++n) {
    if (conj(power(gen_g(), n), gen_h0()) != lamp_at(n))
      return make_result("wreath.presentation", samples, false, t, "conjugation relation at n");
    for (long long m = -range; m <= range; ++m) {
      ++samples;
      if (mul(lamp_at(n), lamp_at(m)) != mul(lamp_at(m), lamp_at(n)))
        return make_result("wreath.presentation", samples, false, t, "lamp commutation");
    }
  }
  return make_result("wreath.presentation", samples, true, t);
}

PropertyResult check_action_law(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    WreathElement a = gen.element(), b = gen.element();
    LaurentPoly p = gen.poly(-4, 4, 3);
    if (act_config(a, act_config(b, p)) != act_config(mul(a, b), p))
      return make_result("wreath.action_law", i + 1, false, t);
  }
  return make_result("wreath.action_law", samples, true, t);
}

PropertyResult check_fitting_predicate(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    WreathElement e = gen.element();
    if (is_in_fitting(e) != (e.shift == 0))
      return make_result("wreath.fitting", i + 1, false, t);
    // membership is conjugation-invariant
    WreathElement c = gen.element();
    if (is_in_fitting(conj(c, e)) != is_in_fitting(e))
      return make_result("wreath.fitting", i + 1, false, t, "not conjugation invariant");
  }
  return make_result("wreath.fitting", samples, true, t);
}

PropertyResult check_order_invariance(std::uint64_t seed, std::size_t samples_per_tag) {
  Timer t;
  Gen gen(seed);
  std::size_t total = 0;
  for (OrderTag tag : kAllTags) {
    for (std::size_t i = 0; i < samples_per_tag; ++i) {
      LaurentPoly p = gen.poly(-5, 5, 4), q = gen.poly(-5, 5, 4);
      Ordering o = compare(p, q, tag);
      if (o == Ordering::Equal) continue;
      ++total;
      WreathElement e = gen.element();
      if (compare(act_config(e, p), act_config(e, q), tag) != o)
        return make_result("orders.invariance", total, false, t,
                           to_string(tag) + " " + p.str() + " vs " + q.str());
    }
  }
  return make_result("orders.invariance", total, true, t);
}

PropertyResult check_order_totality(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    OrderTag tag = kAllTags[gen.pick(0, 3)];
    LaurentPoly a = gen.poly(-5, 5, 4), b = gen.poly(-5, 5, 4), c = gen.poly(-5, 5, 4);
    Ordering ab = compare(a, b, tag);
    if (flip(ab) != compare(b, a, tag))
      return make_result("orders.totality", i + 1, false, t, "antisymmetry");
    if ((ab == Ordering::Equal) != (a == b))
      return make_result("orders.totality", i + 1, false, t, "equality");
    if (ab == Ordering::Less && compare(b, c, tag) == Ordering::Less &&
        compare(a, c, tag) != Ordering::Less)
      return make_result("orders.totality", i + 1, false, t, "transitivity");
  }
  return make_result("orders.totality", samples, true, t);
}

PropertyResult check_between(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  std::size_t done = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    OrderTag tag = kAllTags[gen.pick(0, 3)];
    LaurentPoly a = gen.poly(-5, 5, 4), b = gen.poly(-5, 5, 4);
    if (compare(a, b, tag) == Ordering::Greater) std::swap(a, b);
    if (compare(a, b, tag) != Ordering::Less) continue;
    ++done;
    LaurentPoly mid = between(a, b, tag);
    if (compare(a, mid, tag) != Ordering::Less || compare(mid, b, tag) != Ordering::Less)
      return make_result("orders.between", done, false, t, a.str() + ".." + b.str());
  }
  // density witness: iterating between on a shrinking chain never repeats
  for (OrderTag tag : kAllTags) {
    LaurentPoly lo;  // 0
    LaurentPoly hi = tag == OrderTag::MaxPlus   ? x_power(2)
                     : tag == OrderTag::MaxMinus ? x_power(2).negated()
                     : tag == OrderTag::MinPlus  ? x_power(-2)
                                                 : x_power(-2).negated();
    std::vector<LaurentPoly> seen{lo, hi};
    for (int step = 0; step < 50; ++step) {
      LaurentPoly mid = between(lo, hi, tag);
      for (const LaurentPoly& s : seen)
        if (s == mid) return make_result("orders.between", done, false, t, "density chain repeat");
      seen.push_back(mid);
      hi = mid;
      ++done;
    }
  }
  return make_result("orders.between", done, true, t);
}

PropertyResult check_compare_b(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    BElement b1 = gen.belement(), b2 = gen.belement(), b = gen.belement();
    Ordering o = compare_B(b1, b2);
    if (flip(o) != compare_B(b2, b1)) return make_result("orders.compare_B", i + 1, false, t);
    if ((o == Ordering::Equal) != (b1 == b2))
      return make_result("orders.compare_B", i + 1, false, t, "order separates points");
    if (compare_B(b.compose(b1), b.compose(b2)) != o)
      return make_result("orders.compare_B", i + 1, false, t, "left invariance");
  }
  return make_result("orders.compare_B", samples, true, t);
}

PropertyResult check_xi0_freeness(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  QuadVal base = xi0_image(BElement::identity());
  for (std::size_t i = 0; i < samples; ++i) {
    BElement b = gen.belement_nonidentity();
    if (xi0_image(b) == base)
      return make_result("orders.xi0_free", i + 1, false, t, b.str());
  }
  return make_result("orders.xi0_free", samples, true, t);
}

namespace {

// Brute-force oracle for relate: membership of sampled members.
bool relation_matches_bruteforce(const Leaf& l1, const Leaf& l2, OrderTag tag,
                                 LeafRelation rel) {
  bool inside = l1.level <= l2.level && leaf_contains(l2, l1.tail) && l1 != l2;
  bool contains_ = l2.level <= l1.level && leaf_contains(l1, l2.tail) && l1 != l2;
  switch (rel) {
    case LeafRelation::Equal:
      return l1 == l2;
    case LeafRelation::Inside:
      return inside;
    case LeafRelation::Contains:
      return contains_;
    case LeafRelation::DisjointLeft:
    case LeafRelation::DisjointRight: {
      if (l1 == l2 || inside || contains_) return false;
      // sampled members must sit on one side, matching the reported one
      for (long long c1 = -2; c1 <= 2; ++c1)
        for (long long c2 = -2; c2 <= 2; ++c2) {
          LaurentPoly m1 = l1.tail + LaurentPoly::monomial(l1.level, Int(c1));
          LaurentPoly m2 = l2.tail + LaurentPoly::monomial(l2.level, Int(c2));
          Ordering o = compare(m1, m2, tag);
          if (rel == LeafRelation::DisjointLeft && o != Ordering::Less) return false;
          if (rel == LeafRelation::DisjointRight && o != Ordering::Greater) return false;
        }
      return true;
    }
  }
  return false;
}

}  // namespace

PropertyResult check_noncrossing(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    OrderTag tag = kAllTags[gen.pick(0, 3)];
    OrderTag side = is_plus(tag) ? OrderTag::MaxPlus : OrderTag::MaxMinus;
    Leaf l1 = gen.leaf(), l2 = gen.leaf();
    LeafRelation rel = relate(l1, l2, tag);
    if (rel != relate(l1, l2, side))
      return make_result("lamination.noncrossing", i + 1, false, t, "sign convention mismatch");
    if (!relation_matches_bruteforce(l1, l2, side, rel))
      return make_result("lamination.noncrossing", i + 1, false, t,
                         l1.str() + " vs " + l2.str() + " -> " + to_string(rel));
  }
  return make_result("lamination.noncrossing", samples, true, t);
}

PropertyResult check_claim1(std::uint64_t seed, std::size_t polys_per_cell) {
  Timer t;
  Gen gen(seed);
  std::size_t total = 0;
  for (OrderTag tag : kAllTags) {
    for (long long n = -5; n <= 5; ++n) {
      long long bounding = is_max(tag) ? n + 1 : n - 1;
      WreathElement upper = lamp_at(bounding);
      WreathElement lower = inv(upper);
      if (!is_plus(tag)) std::swap(upper, lower);
      for (std::size_t r = 0; r < polys_per_cell; ++r) {
        LaurentPoly p = gen.poly(-6, 6, 4);
        for (long long k = -20; k <= 20; ++k) {
          ++total;
          LaurentPoly mid = act_config(power(lamp_at(n), k), p);
          if (compare(act_config(lower, p), mid, tag) != Ordering::Less ||
              compare(mid, act_config(upper, p), tag) != Ordering::Less)
            return make_result("lamination.claim1", total, false, t,
                               to_string(tag) + " n=" + std::to_string(n) +
                                   " k=" + std::to_string(k));
        }
      }
    }
  }
  return make_result("lamination.claim1", total, true, t);
}

PropertyResult check_discreteness(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Leaf a = gen.leaf(), b = gen.leaf();
    if (a.level == b.level && a != b) {
      LeafRelation rel = relate(a, b);
      if (rel != LeafRelation::DisjointLeft && rel != LeafRelation::DisjointRight)
        return make_result("lamination.discreteness", i + 1, false, t, "same-level overlap");
    }
    Leaf p = parent(a);
    if (p.level != a.level + 1 || relate(a, p) != LeafRelation::Inside)
      return make_result("lamination.discreteness", i + 1, false, t, "parent level/containment");
    if (hor(p) != hor(a) + 1)
      return make_result("lamination.discreteness", i + 1, false, t, "hor along parent chain");
    // parent is the minimal strict ancestor: any leaf strictly containing a
    // contains p as well
    Leaf anc = gen.leaf();
    if (relate(a, anc) == LeafRelation::Inside) {
      LeafRelation pr = relate(p, anc);
      if (pr != LeafRelation::Inside && pr != LeafRelation::Equal)
        return make_result("lamination.discreteness", i + 1, false, t, "parent not minimal");
    }
  }
  return make_result("lamination.discreteness", samples, true, t);
}

PropertyResult check_tree_axioms(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Leaf u = gen.leaf(), v = gen.leaf(), w = gen.leaf();
    if (join(u, u) != u) return make_result("tree.axioms", i + 1, false, t, "idempotent");
    if (join(u, v) != join(v, u)) return make_result("tree.axioms", i + 1, false, t, "commutative");
    if (join(join(u, v), w) != join(u, join(v, w)))
      return make_result("tree.axioms", i + 1, false, t, "associative");
    Leaf j = join(u, v);
    auto above = [](const Leaf& lo, const Leaf& hi) {
      LeafRelation r = relate(lo, hi);
      return r == LeafRelation::Equal || r == LeafRelation::Inside;
    };
    if (!above(u, j) || !above(v, j))
      return make_result("tree.axioms", i + 1, false, t, "join not an upper bound");
    // least upper bound vs the parent-chain scan
    Leaf walk = u;
    for (int step = 0; step < 200; ++step) {
      if (above(v, walk)) break;
      walk = parent(walk);
    }
    if (walk != j) return make_result("tree.axioms", i + 1, false, t, "join not least");
  }
  return make_result("tree.axioms", samples, true, t);
}

PropertyResult check_horograding_equivariance(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    WreathElement e = gen.element();
    Leaf l = gen.leaf();
    if (hor(act_leaf(e, l)) != hor(l) + e.shift)
      return make_result("lamination.horograding", i + 1, false, t);
    if (act_leaf(gen_g(), Leaf(l.level, l.tail)).level != l.level + 1)
      return make_result("lamination.horograding", i + 1, false, t, "shift by one");
    // action equivariance with multiplication
    WreathElement f = gen.element();
    if (act_leaf(e, act_leaf(f, l)) != act_leaf(mul(e, f), l))
      return make_result("lamination.horograding", i + 1, false, t, "leaf action law");
  }
  return make_result("lamination.horograding", samples, true, t);
}

PropertyResult check_quotient_equivariance(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    WreathElement e = gen.element();
    Leaf v = gen.leaf();
    if (quotient_by_L(act_leaf(e, v)) != quotient_by_L(v) + e.shift)
      return make_result("tree.quotient", i + 1, false, t);
    if (tree_horograding(act_leaf(e, v), Leaf(0, LaurentPoly())) !=
        tree_horograding(v, Leaf(0, LaurentPoly())) + e.shift)
      return make_result("tree.quotient", i + 1, false, t, "simplicial horograding");
  }
  return make_result("tree.quotient", samples, true, t);
}

PropertyResult check_germ_equivariance(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  std::size_t done = 0;
  while (done < samples) {
    WreathElement e = gen.element();
    Leaf bound = germ_bound(e);
    LaurentPoly p = gen.nonzero_poly(-4, 6, 3);
    if (p.top_degree() <= std::max(bound.level, 0LL)) continue;  // inside the bound
    ++done;
    long long expected;
    if (sign(p, OrderTag::MaxPlus) == Sign::Pos)
      expected = germ_plus(act_config(e, p)) - germ_plus(p);
    else
      expected = germ_minus(act_config(e, p)) - germ_minus(p);
    if (expected != e.shift)
      return make_result("lamination.germ", done, false, t,
                         e.str() + " at " + p.str());
  }
  return make_result("lamination.germ", samples, true, t);
}

PropertyResult check_branching_transitivity(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Leaf v = gen.leaf(), w = gen.leaf();
    WreathElement e{w.tail - v.tail.shifted(w.level - v.level), w.level - v.level};
    if (act_leaf(e, v) != w)
      return make_result("tree.one_orbit", i + 1, false, t, v.str() + " -> " + w.str());
  }
  return make_result("tree.one_orbit", samples, true, t);
}

PropertyResult check_cut_saturation(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  const Int K1 = 1000000, K2 = 2000000;
  std::size_t done = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    OrderTag tag = gen.coin() ? OrderTag::MaxPlus : OrderTag::MaxMinus;
    auto random_cut = [&]() -> Cut {
      long long kind = gen.pick(0, 2);
      if (kind == 0) return Cut::at_config(gen.poly(-4, 4, 3));
      Leaf l = gen.leaf(-4, 4, 6, 2);
      return kind == 1 ? Cut::leaf_sup(l) : Cut::leaf_inf(l);
    };
    Cut c1 = random_cut(), c2 = random_cut();
    auto surrogate = [&](const Cut& c, const Int& K) -> LaurentPoly {
      Int to_sup = is_plus(tag) ? K : Int(-K);
      switch (c.kind) {
        case Cut::Kind::Config: return c.config;
        case Cut::Kind::LeafSup:
          return c.leaf.tail + LaurentPoly::monomial(c.leaf.level, to_sup);
        case Cut::Kind::LeafInf:
          return c.leaf.tail + LaurentPoly::monomial(c.leaf.level, -to_sup);
      }
      return c.config;
    };
    Ordering fine = compare(surrogate(c1, K1), surrogate(c2, K1), tag);
    Ordering finer = compare(surrogate(c1, K2), surrogate(c2, K2), tag);
    if (fine != finer) continue;  // saturation not yet stable (identical cuts aside)
    ++done;
    Ordering cut_order = compare_cut(c1, c2, tag);
    if (cut_order == Ordering::Equal) {
      bool identical = c1.kind == c2.kind &&
                       ((c1.kind == Cut::Kind::Config && c1.config == c2.config) ||
                        (c1.kind != Cut::Kind::Config && c1.leaf == c2.leaf));
      // sup = inf of the adjacent leaf: surrogates straddle the common cut
      Ordering want = identical ? Ordering::Equal
                      : c1.kind == Cut::Kind::LeafSup ? Ordering::Less
                                                      : Ordering::Greater;
      if (fine != want)
        return make_result("cuts.saturation", done, false, t,
                           c1.str() + " = " + c2.str() + " but surrogates " + to_string(fine));
    } else if (fine != cut_order) {
      return make_result("cuts.saturation", done, false, t,
                         c1.str() + " vs " + c2.str() + ": cut " + to_string(cut_order) +
                             ", saturated " + to_string(fine));
    }
  }
  return make_result("cuts.saturation", done, true, t);
}

PropertyResult check_realization_determinism(std::size_t depth) {
  Timer t;
  Realization r1 = Realization::build(depth, OrderTag::MaxPlus);
  Realization r2 = Realization::build(depth, OrderTag::MaxPlus);
  bool same = r1.serialize() == r2.serialize();
  // prefix-stability: a deeper run extends a shallower one
  Realization shallow = Realization::build(depth / 2, OrderTag::MaxPlus);
  bool prefix = true;
  for (const auto& [p, q] : shallow.entries()) {
    auto assigned = r1.coord_if_assigned(p);
    if (!assigned || *assigned != q) {
      prefix = false;
      break;
    }
  }
  return make_result("realization.determinism", r1.size(), same && prefix, t,
                     same ? (prefix ? "" : "not monotone in depth") : "rebuild differs");
}

PropertyResult check_realization_order(std::size_t depth) {
  Timer t;
  std::size_t total = 0;
  for (OrderTag tag : kAllTags) {
    Realization r = Realization::build(depth, tag);
    const auto& entries = r.entries();
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      ++total;
      if (compare(entries[i].first, entries[i + 1].first, tag) != Ordering::Less ||
          entries[i].second >= entries[i + 1].second)
        return make_result("realization.order", total, false, t, to_string(tag));
    }
    auto zero = r.coord_if_assigned(LaurentPoly());
    if (!zero || *zero != 0)
      return make_result("realization.order", total, false, t, "coord(0) != 0");
  }
  return make_result("realization.order", total, true, t);
}

PropertyResult check_realization_equivariance(std::uint64_t seed, std::size_t depth,
                                              std::size_t elements) {
  Timer t;
  Gen gen(seed);
  Realization r = Realization::build(depth, OrderTag::MaxPlus);
  std::vector<std::pair<LaurentPoly, Rat>> snapshot = r.entries();
  std::size_t total = 0;
  for (std::size_t n = 0; n < elements; ++n) {
    WreathElement e = gen.element();
    // order preservation of the realized action over every assigned point
    for (std::size_t i = 0; i + 1 < snapshot.size(); ++i) {
      ++total;
      if (compare(act_config(e, snapshot[i].first), act_config(e, snapshot[i + 1].first),
                  OrderTag::MaxPlus) != Ordering::Less)
        return make_result("realization.equivariance", total, false, t, e.str());
    }
    // realized identity on a deterministic sample, exercising extension
    for (std::size_t k = 0; k < 8; ++k) {
      std::size_t idx = (k * 131 + n * 17) % snapshot.size();
      const auto& [p, q] = snapshot[idx];
      ++total;
      if (r.act_point(e, q) != r.coord(act_config(e, p)))
        return make_result("realization.equivariance", total, false, t, "act_point mismatch");
    }
    // action law through coordinates
    WreathElement f = gen.element();
    const auto& [p, q] = snapshot[n % snapshot.size()];
    ++total;
    if (r.act_point(mul(e, f), q) != r.act_point(e, r.act_point(f, q)))
      return make_result("realization.equivariance", total, false, t, "action law");
  }
  return make_result("realization.equivariance", total, true, t);
}

PropertyResult check_sigma_injectivity(std::size_t depth) {
  Timer t;
  Realization r1 = Realization::build(depth, OrderTag::MaxPlus);
  Realization r2 = Realization::build_with(depth, OrderTag::MaxPlus, [](std::size_t i) {
    return enumerate_config(i ^ 1);  // same set, different visit order
  });
  std::size_t total = 0;
  bool have_prev = false;
  Rat prev;
  for (const auto& [p, q] : r1.entries()) {
    Rat image = r2.coord(p);
    if (have_prev && image <= prev)
      return make_result("realization.sigma_injective", total, false, t);
    prev = image;
    have_prev = true;
    ++total;
  }
  return make_result("realization.sigma_injective", total, true, t);
}

PropertyResult check_minimality_probe(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  std::size_t done = 0;
  while (done < samples) {
    OrderTag tag = kAllTags[gen.pick(0, 3)];
    LaurentPoly q1 = gen.poly(-4, 4, 3), q2 = gen.poly(-4, 4, 3);
    if (compare(q1, q2, tag) == Ordering::Greater) std::swap(q1, q2);
    if (compare(q1, q2, tag) != Ordering::Less) continue;
    LaurentPoly x = gen.poly(-4, 4, 3);
    ++done;
    WreathElement w = minimality_probe(q1, q2, x, tag);
    LaurentPoly image = act_config(w, x);
    if (compare(q1, image, tag) != Ordering::Less || compare(image, q2, tag) != Ordering::Less)
      return make_result("realization.minimality_probe", done, false, t,
                         q1.str() + " .. " + q2.str() + " x=" + x.str());
  }
  return make_result("realization.minimality_probe", samples, true, t);
}

PropertyResult check_orbit_density(std::size_t depth) {
  Timer t;
  Realization r = Realization::build(depth, OrderTag::MaxPlus);
  std::vector<Rat> window = r.realized_in(Rat(-4), Rat(4));
  std::size_t total = 0;
  const Rat min_gap(1, 8);
  for (std::size_t i = 0; i + 1 < window.size(); ++i) {
    if (window[i + 1] - window[i] < min_gap) continue;
    const LaurentPoly* q1 = r.config_at(window[i]);
    const LaurentPoly* q2 = r.config_at(window[i + 1]);
    ++total;
    WreathElement w = minimality_probe(*q1, *q2, LaurentPoly(), OrderTag::MaxPlus);
    LaurentPoly image = act_config(w, LaurentPoly());
    if (compare(*q1, image, OrderTag::MaxPlus) != Ordering::Less ||
        compare(image, *q2, OrderTag::MaxPlus) != Ordering::Less)
      return make_result("realization.orbit_density", total, false, t);
  }
  return make_result("realization.orbit_density", total, true, t);
}

namespace {

Rat random_rat(Gen& gen, long long num_bound, long long den_bound) {
  return Rat(Int(gen.pick(-num_bound, num_bound)), Int(gen.pick(1, den_bound)));
}

Rat random_positive_rat(Gen& gen, long long num_bound, long long den_bound) {
  return Rat(Int(gen.pick(1, num_bound)), Int(gen.pick(1, den_bound)));
}

}  // namespace

PropertyResult check_affine_classifier(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Rat lambda = gen.pick(0, 3) == 0 ? Rat(1) : random_positive_rat(gen, 6, 4);
    Rat alpha = random_rat(gen, 6, 4);
    Rat beta = random_rat(gen, 6, 4);
    AffineMap h0(1, alpha), g(lambda, beta);
    AffineClassification c = classify_affine(h0, g);
    // the witness must conjugate onto the normal form exactly
    if (c.witness) {
      const AffineMap& w = *c.witness;
      AffineMap gn = w.compose(g).compose(w.inverse());
      AffineMap hn = w.compose(h0).compose(w.inverse());
      switch (c.label.kind) {
        case LabelKind::NonAbelianAffine:
          if (gn != AffineMap(lambda, 0) ||
              hn != AffineMap(1, c.label.lamp_sign > 0 ? 1 : -1))
            return make_result("classify.affine", i + 1, false, t, "witness (nonabelian)");
          break;
        case LabelKind::Translations:
          if (hn != AffineMap(1, Rat(c.label.ratio_a)) || gn != AffineMap(1, Rat(c.label.ratio_b)))
            return make_result("classify.affine", i + 1, false, t, "witness (translations)");
          break;
        case LabelKind::Cyclic: {
          Rat off = hn.offset + gn.offset;  // the nontrivial one
          if (hn.slope != 1 || gn.slope != 1 || (off != 1 && off != -1))
            return make_result("classify.affine", i + 1, false, t, "witness (cyclic)");
          break;
        }
        default: break;
      }
    }
    // conjugacy stability of the label
    Rat cs = random_positive_rat(gen, 4, 3);
    AffineMap cmap(cs, random_rat(gen, 4, 3));
    AffineClassification c2 = classify_affine(cmap.compose(h0).compose(cmap.inverse()),
                                              cmap.compose(g).compose(cmap.inverse()));
    if (c2.label != c.label)
      return make_result("classify.affine", i + 1, false, t,
                         "label not conjugacy invariant: " + c.label.str() + " vs " +
                             c2.label.str());
  }
  return make_result("classify.affine", samples, true, t);
}

PropertyResult check_element_typing(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    OrderTag tag = kAllTags[gen.pick(0, 3)];
    WreathElement e = gen.element();
    ElementType type = element_type(e, tag);
    if (e.is_identity()) {
      if (type != ElementType::Identity) return make_result("classify.element", i + 1, false, t);
      continue;
    }
    if (e.shift == 0) {
      if (type != ElementType::TotallyBounded)
        return make_result("classify.element", i + 1, false, t, "lamp element");
      // domination certificate is the total-boundedness witness
      LaurentPoly p = gen.poly(-3, 3, 2);
      WreathElement h = domination_certificate(e, p);
      for (long long n = -10; n <= 10; ++n) {
        LaurentPoly orbit = act_config(power(e, n), p);
        if (compare(act_config(inv(h), p), orbit, OrderTag::MaxPlus) != Ordering::Less ||
            compare(orbit, act_config(h, p), OrderTag::MaxPlus) != Ordering::Less)
          return make_result("classify.element", i + 1, false, t, "domination oracle");
      }
      continue;
    }
    // orbit probes in the Max world (reflect for the Min orders)
    WreathElement probe = is_max(tag) ? e : WreathElement{e.lamp.reflected(), -e.shift};
    bool reported_expanding = type == ElementType::ExpandingHomothety;
    // far probes: an expanding element pushes distant points further out on
    // both sides, a contracting one pulls them in
    long long far = 30 + (probe.lamp.is_zero()
                              ? 0
                              : std::max(std::llabs(probe.lamp.top_degree()),
                                         std::llabs(probe.lamp.low_degree())));
    LaurentPoly right = x_power(far), left = x_power(far).negated();
    bool pushes_right =
        compare(right, act_config(probe, right), OrderTag::MaxPlus) == Ordering::Less;
    bool pulls_left =
        compare(act_config(probe, left), left, OrderTag::MaxPlus) == Ordering::Less;
    bool oracle_expanding = pushes_right && pulls_left;
    bool oracle_contracting = !pushes_right && !pulls_left;
    if (!(oracle_expanding || oracle_contracting))
      return make_result("classify.element", i + 1, false, t, "far probe inconclusive");
    if (reported_expanding != oracle_expanding)
      return make_result("classify.element", i + 1, false, t,
                         e.str() + " " + to_string(tag) + " -> " + to_string(type));
    // iterated probe: expanding orbits escape the deep central leaves,
    // contracting orbits settle leafwise
    LaurentPoly x = LaurentPoly::constant(1);
    bool escaped = false, settled = false;
    WreathElement acc = identity();
    LaurentPoly prev = x;
    for (int m = 1; m <= 30; ++m) {
      acc = mul(acc, probe);
      LaurentPoly orbit = act_config(acc, x);
      if (!leaf_contains(Leaf(25, LaurentPoly()), orbit)) escaped = true;
      if ((orbit - prev).part_above(-25).is_zero()) settled = true;
      prev = orbit;
    }
    if (oracle_expanding && !escaped)
      return make_result("classify.element", i + 1, false, t, "expanding orbit never escaped");
    if (oracle_contracting && !settled)
      return make_result("classify.element", i + 1, false, t, "contracting orbit never settled");
  }
  return make_result("classify.element", samples, true, t);
}

PropertyResult check_classify_pl_corpus(std::uint64_t seed, std::size_t corpus) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < corpus; ++i) {
    PLMap g, h0;
    bool expect_reducible = false;
    ClassLabel expected;
    if (i % 2 == 0) {
      // affine pair
      Rat lambda = gen.pick(0, 2) == 0 ? Rat(1) : random_positive_rat(gen, 5, 3);
      Rat alpha = random_rat(gen, 5, 3);
      Rat beta = random_rat(gen, 5, 3);
      g = PLMap::affine(AffineMap(lambda, beta));
      h0 = PLMap::affine(AffineMap(1, alpha));
      expected = classify_affine(AffineMap(1, alpha), AffineMap(lambda, beta)).label;
    } else {
      // reducible pair: both maps fix the origin
      expect_reducible = true;
      auto fixer = [&]() {
        Rat s1 = random_positive_rat(gen, 4, 2) + Rat(1, 5);
        Rat s2 = random_positive_rat(gen, 4, 2) + Rat(1, 5);
        return PLMap::from_nodes({{Rat(0), Rat(0)}}, s1, s2);
      };
      g = fixer();
      h0 = fixer();
      expected = ClassLabel::reducible();
    }
    ClassLabel at4 = classify_pl(g, h0, 4);
    ClassLabel at6 = classify_pl(g, h0, 6);
    if (expect_reducible && at4.kind != LabelKind::Reducible)
      return make_result("classify.pl_corpus", i + 1, false, t, "mislabelled reducible");
    if (!expect_reducible && at4 != expected)
      return make_result("classify.pl_corpus", i + 1, false, t,
                         "affine mislabel: " + at4.str() + " vs " + expected.str());
    // monotone informativeness: definite labels never flip under deeper checks
    if (at4.is_definite() && at6.is_definite() && !(at4 == at6))
      return make_result("classify.pl_corpus", i + 1, false, t, "label flip under depth");
  }
  return make_result("classify.pl_corpus", corpus, true, t);
}

PropertyResult check_disjointness_suite(std::size_t max_total) {
  Timer t;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    std::size_t N = 1;
    while (true) {
      std::size_t total = 1;
      bool over = false;
      for (std::size_t j = 0; j < n; ++j) {
        total *= (N + 1);
        if (total > max_total) {
          over = true;
          break;
        }
      }
      if (over) break;
      ++N;
    }
    if (n > 1 && N < 2) break;
    DisjointnessReport report = disjointness_check(N, n, OrderTag::MaxPlus);
    checked += report.pairs_checked;
    if (!report.all_disjoint)
      return make_result("c1.disjointness", checked, false, t,
                         "N=" + std::to_string(N) + " n=" + std::to_string(n));
  }
  return make_result("c1.disjointness", checked, true, t);
}

PropertyResult check_growth_predicate(std::uint64_t seed, std::size_t triples) {
  Timer t;
  Gen gen(seed);
  std::size_t done = 0;
  while (done < triples) {
    std::size_t N = static_cast<std::size_t>(gen.pick(2, 6));
    Rat lambda = random_positive_rat(gen, 3, 2) + Rat(1, 2);
    Rat eps(1, gen.pick(50, 200));
    if (c1_growth_predicate(lambda, N, eps, 1) <= 1) continue;  // outside the regime
    ++done;
    Rat prev = 1;
    for (std::size_t n = 1; n <= 6; ++n) {
      Rat value = c1_growth_predicate(lambda, N, eps, n);
      if (value <= 1 || value <= prev)
        return make_result("c1.growth", done, false, t, "not strictly increasing past 1");
      prev = value;
    }
  }
  return make_result("c1.growth", done, true, t);
}

PropertyResult check_domination(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    WreathElement gl{gen.nonzero_poly(-4, 4, 3), 0};
    LaurentPoly p = gen.poly(-4, 4, 3);
    WreathElement h = domination_certificate(gl, p);
    Leaf l0 = domination_bounding_leaf(gl, p);
    if (relate(act_leaf(h, l0), l0) != LeafRelation::DisjointRight)
      return make_result("lamination.domination", i + 1, false, t, "leaf certificate");
    for (long long n = -50; n <= 50; ++n) {
      LaurentPoly orbit = act_config(power(gl, n), p);
      if (!leaf_contains(l0, orbit))
        return make_result("lamination.domination", i + 1, false, t, "orbit left the leaf");
      if (compare(act_config(inv(h), p), orbit, OrderTag::MaxPlus) != Ordering::Less ||
          compare(orbit, act_config(h, p), OrderTag::MaxPlus) != Ordering::Less)
        return make_result("lamination.domination", i + 1, false, t, "sandwich");
    }
  }
  return make_result("lamination.domination", samples, true, t);
}

PropertyResult check_bconfig_invariance(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  std::size_t done = 0;
  while (done < samples) {
    BConfig f1 = gen.bconfig(), f2 = gen.bconfig();
    Ordering o = compare_bconfig(f1, f2);
    if (o == Ordering::Equal) continue;
    ++done;
    GBElement e = gen.gbelement();
    if (compare_bconfig(act_bconfig(e, f1), act_bconfig(e, f2)) != o)
      return make_result("counterexample.order_invariance", done, false, t,
                         f1.str() + " vs " + f2.str());
  }
  return make_result("counterexample.order_invariance", samples, true, t);
}

PropertyResult check_tau_automorphism(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    GBElement a = gen.gbelement(), b = gen.gbelement();
    long long n = gen.pick(-3, 3);
    if (tau_n(mul_gb(a, b), n) != mul_gb(tau_n(a, n), tau_n(b, n)))
      return make_result("counterexample.tau", i + 1, false, t, "not multiplicative");
    if (tau_n(tau_n(a, n), -n) != a)
      return make_result("counterexample.tau", i + 1, false, t, "not invertible");
    if (mul_gb(a, inv_gb(a)) != gb_identity() || mul_gb(inv_gb(a), a) != gb_identity())
      return make_result("counterexample.tau", i + 1, false, t, "inverse law");
  }
  return make_result("counterexample.tau", samples, true, t);
}

PropertyResult check_bcut_embedding(std::uint64_t seed, std::size_t samples) {
  Timer t;
  Gen gen(seed);
  BConfig zero;
  for (std::size_t i = 0; i < samples; ++i) {
    BElement b1 = gen.belement(), b2 = gen.belement(), b = gen.belement();
    if (compare_bcut(BCut::cut(zero, b1), BCut::cut(zero, b2)) != compare_B(b1, b2))
      return make_result("counterexample.embedding", i + 1, false, t, "order");
    GBElement shift{zero, b};
    if (act_bcut(shift, BCut::cut(zero, b1)) != BCut::cut(zero, b.compose(b1)))
      return make_result("counterexample.embedding", i + 1, false, t, "equivariance");
  }
  return make_result("counterexample.embedding", samples, true, t);
}

PropertyResult check_stabilization(std::uint64_t seed, std::size_t pairs, std::size_t cap) {
  Timer t;
  Gen gen(seed);
  std::size_t done = 0;
  while (done < pairs) {
    GBElement g1 = gen.gbelement(), g2 = gen.gbelement();
    if (g1.base == g2.base) continue;
    ++done;
    StabilizationResult res = stabilization_N(g1, g2, cap);
    if (!res.stabilized)
      return make_result("counterexample.stabilization", done, false, t,
                         "not stabilized by cap: " + g1.str() + " vs " + g2.str());
    if (res.order != compare_B(g1.base, g2.base))
      return make_result("counterexample.stabilization", done, false, t, "wrong limit order");
    for (std::size_t n = res.N; n <= cap; ++n)
      if (base_orbit_compare(g1, g2, static_cast<long long>(n)) != res.order)
        return make_result("counterexample.stabilization", done, false, t, "not stable past N");
    auto analytic_at = [&](const GBElement& g, std::size_t n) {
      return g.config.is_zero() ||
             compare_B(maxsupp_after_twist(g.config, static_cast<long long>(n)), g.base) ==
                 Ordering::Less;
    };
    if (!analytic_at(g1, res.N) || !analytic_at(g2, res.N))
      return make_result("counterexample.stabilization", done, false, t, "analytic bound");
  }
  return make_result("counterexample.stabilization", pairs, true, t);
}

PropertyResult check_plante_window_label(std::size_t realization_depth, std::size_t depth) {
  Timer t;
  Realization r = Realization::build(realization_depth, OrderTag::MaxPlus);
  PLMap gw = r.pl_window(gen_g(), Rat(-4), Rat(4));
  PLMap hw = r.pl_window(gen_h0(), Rat(-4), Rat(4));
  ClassLabel label = classify_pl(gw, hw, depth);
  bool ok = label == ClassLabel::plante_like(OrderTag::MaxPlus);
  return make_result("classify.plante_window", 1, ok, t, ok ? "" : label.str());
}

std::vector<Property> standard_properties() {
  auto wrap = [](std::string name, auto fn) {
    return Property{name, [fn](std::uint64_t seed) { return fn(seed); }};
  };
  std::vector<Property> props;
  props.push_back(wrap("wreath.associativity",
                       [](std::uint64_t s) { return check_wreath_associativity(s, 10000); }));
  props.push_back(wrap("wreath.presentation",
                       [](std::uint64_t) { return check_presentation(8); }));
  props.push_back(wrap("wreath.action_law",
                       [](std::uint64_t s) { return check_action_law(s, 10000); }));
  props.push_back(wrap("wreath.fitting",
                       [](std::uint64_t s) { return check_fitting_predicate(s, 2000); }));
  props.push_back(wrap("orders.invariance",
                       [](std::uint64_t s) { return check_order_invariance(s, 10000); }));
  props.push_back(wrap("orders.totality",
                       [](std::uint64_t s) { return check_order_totality(s, 10000); }));
  props.push_back(wrap("orders.between", [](std::uint64_t s) { return check_between(s, 2000); }));
  props.push_back(wrap("orders.compare_B",
                       [](std::uint64_t s) { return check_compare_b(s, 2000); }));
  props.push_back(wrap("orders.xi0_free",
                       [](std::uint64_t s) { return check_xi0_freeness(s, 1000); }));
  props.push_back(wrap("lamination.noncrossing",
                       [](std::uint64_t s) { return check_noncrossing(s, 10000); }));
  props.push_back(wrap("lamination.claim1", [](std::uint64_t s) { return check_claim1(s, 20); }));
  props.push_back(wrap("lamination.discreteness",
                       [](std::uint64_t s) { return check_discreteness(s, 5000); }));
  props.push_back(wrap("tree.axioms", [](std::uint64_t s) { return check_tree_axioms(s, 1000); }));
  props.push_back(wrap("lamination.horograding",
                       [](std::uint64_t s) { return check_horograding_equivariance(s, 10000); }));
  props.push_back(wrap("tree.quotient",
                       [](std::uint64_t s) { return check_quotient_equivariance(s, 1000); }));
  props.push_back(wrap("lamination.germ",
                       [](std::uint64_t s) { return check_germ_equivariance(s, 1000); }));
  props.push_back(wrap("tree.one_orbit",
                       [](std::uint64_t s) { return check_branching_transitivity(s, 1000); }));
  props.push_back(wrap("cuts.saturation",
                       [](std::uint64_t s) { return check_cut_saturation(s, 4000); }));
  props.push_back(wrap("lamination.domination",
                       [](std::uint64_t s) { return check_domination(s, 100); }));
  props.push_back(wrap("realization.determinism",
                       [](std::uint64_t) { return check_realization_determinism(200); }));
  props.push_back(wrap("realization.order",
                       [](std::uint64_t) { return check_realization_order(200); }));
  props.push_back(wrap("realization.equivariance",
                       [](std::uint64_t s) { return check_realization_equivariance(s, 120, 200); }));
  props.push_back(wrap("realization.sigma_injective",
                       [](std::uint64_t) { return check_sigma_injectivity(200); }));
  props.push_back(wrap("realization.minimality_probe",
                       [](std::uint64_t s) { return check_minimality_probe(s, 200); }));
  props.push_back(wrap("realization.orbit_density",
                       [](std::uint64_t) { return check_orbit_density(500); }));
  props.push_back(wrap("classify.affine",
                       [](std::uint64_t s) { return check_affine_classifier(s, 200); }));
  props.push_back(wrap("classify.element",
                       [](std::uint64_t s) { return check_element_typing(s, 200); }));
  props.push_back(wrap("classify.pl_corpus",
                       [](std::uint64_t s) { return check_classify_pl_corpus(s, 50); }));
  props.push_back(wrap("c1.disjointness",
                       [](std::uint64_t) { return check_disjointness_suite(2000); }));
  props.push_back(wrap("c1.growth", [](std::uint64_t s) { return check_growth_predicate(s, 20); }));
  props.push_back(wrap("counterexample.order_invariance",
                       [](std::uint64_t s) { return check_bconfig_invariance(s, 10000); }));
  props.push_back(wrap("counterexample.tau",
                       [](std::uint64_t s) { return check_tau_automorphism(s, 1000); }));
  props.push_back(wrap("counterexample.embedding",
                       [](std::uint64_t s) { return check_bcut_embedding(s, 2000); }));
  props.push_back(wrap("counterexample.stabilization",
                       [](std::uint64_t s) { return check_stabilization(s, 50, 50); }));
  return props;
}

std::vector<PropertyResult> run_properties(const std::vector<Property>& props,
                                           std::uint64_t seed, std::ostream* tsv,
                                           bool fail_fast) {
  std::vector<PropertyResult> results;
  if (tsv) *tsv << "property\tsamples\tverdict\tmillis\n";
  for (std::size_t i = 0; i < props.size(); ++i) {
    PropertyResult res = props[i].run(seed + i);
    if (tsv) {
      *tsv << res.name << "\t" << res.samples << "\t" << (res.pass ? "PASS" : "FAIL") << "\t"
           << res.millis;
      if (!res.pass && !res.detail.empty()) *tsv << "\t" << res.detail;
      *tsv << "\n";
    }
    results.push_back(res);
    if (fail_fast && !res.pass) break;
  }
  return results;
}

bool verify_all(std::uint64_t seed, std::ostream& out) {
  std::vector<PropertyResult> results = run_properties(standard_properties(), seed, &out, true);
  for (const PropertyResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace solvline

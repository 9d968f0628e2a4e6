#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvline/gen.hpp"
#include "solvline/lamination.hpp"
#include "solvline/verify.hpp"

using namespace solvline;

namespace {

// Membership oracle for leaf keys: Q lies in the leaf of P at level n iff the
// lamp powers at level n keep Q strictly between the level-(n+1) images of P,
// for every probed exponent.
bool sandwich_membership(long long n, const LaurentPoly& p, const LaurentPoly& q) {
  WreathElement upper = lamp_at(n + 1);
  LaurentPoly lo = act_config(inv(upper), p);
  LaurentPoly hi = act_config(upper, p);
  for (long long k = -20; k <= 20; ++k) {
    LaurentPoly probe = act_config(power(lamp_at(n), k), q);
    if (compare(lo, probe, OrderTag::MaxPlus) != Ordering::Less ||
        compare(probe, hi, OrderTag::MaxPlus) != Ordering::Less)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("leaf keys against the sandwich oracle") {
  LaurentPoly p = LaurentPoly::parse("3+X^2");
  Leaf l = leaf_of(0, p);
  CHECK(l == Leaf(0, LaurentPoly::parse("X^2")));
  CHECK(leaf_contains(l, p));
  CHECK(sandwich_membership(0, p, p));
  CHECK(sandwich_membership(0, p, LaurentPoly::parse("X^2-7")));
  CHECK(!sandwich_membership(0, p, LaurentPoly::parse("2X^2")));

  CHECK(leaf_of(2, LaurentPoly()) == Leaf(2, LaurentPoly()));
  CHECK(leaf_of(-1, LaurentPoly::constant(1)) == Leaf(-1, LaurentPoly::constant(1)));
  CHECK_THROWS_AS(Leaf(3, LaurentPoly::parse("X^2")), std::invalid_argument);
}

TEST_CASE("relate") {
  Leaf base(0, LaurentPoly());
  CHECK(relate(base, Leaf(1, LaurentPoly())) == LeafRelation::Inside);
  CHECK(relate(Leaf(0, x_power(1)), Leaf(0, LaurentPoly::parse("2X"))) ==
        LeafRelation::DisjointLeft);
  Leaf l(-2, LaurentPoly::parse("X^3-X"));
  CHECK(relate(l, l) == LeafRelation::Equal);
  CHECK(relate(Leaf(1, LaurentPoly()), base) == LeafRelation::Contains);
  // side flips with the sign convention
  CHECK(relate(Leaf(0, x_power(1)), Leaf(0, LaurentPoly::parse("2X")), OrderTag::MaxMinus) ==
        LeafRelation::DisjointRight);
  // Min tags read keys in the reflected world: only the sign side matters
  CHECK(relate(Leaf(0, x_power(1)), Leaf(0, LaurentPoly::parse("2X")), OrderTag::MinPlus) ==
        LeafRelation::DisjointLeft);
}

TEST_CASE("act_leaf and horograding") {
  Leaf base(0, LaurentPoly());
  CHECK(act_leaf(gen_g(), base) == Leaf(1, LaurentPoly()));
  Leaf with_tail(0, LaurentPoly::parse("X^4-2X"));
  CHECK(act_leaf(gen_h0(), with_tail) == with_tail);
  CHECK(act_leaf(identity(), with_tail) == with_tail);

  CHECK(hor(Leaf(3, x_power(5))) == 3);
  Gen gen(41);
  for (int i = 0; i < 200; ++i) {
    Leaf l = gen.leaf();
    CHECK(hor(act_leaf(gen_g(), l)) - hor(l) == 1);
    CHECK(hor(act_leaf(lamp_at(7), l)) - hor(l) == 0);
  }
}

TEST_CASE("parent minimality by brute force") {
  CHECK(parent(Leaf(0, x_power(1))) == Leaf(1, LaurentPoly()));
  CHECK(parent(Leaf(5, LaurentPoly())) == Leaf(6, LaurentPoly()));
  CHECK(parent(Leaf(-2, LaurentPoly::parse("3X^4"))) == Leaf(-1, LaurentPoly::parse("3X^4")));

  // all level-1 leaves with small tails: only the parent strictly contains
  // Leaf(0, X)
  Leaf child(0, x_power(1));
  Leaf expected = parent(child);
  int containing = 0;
  for (long long c2 = -3; c2 <= 3; ++c2)
    for (long long c3 = -3; c3 <= 3; ++c3) {
      LaurentPoly tail;
      tail.add_term(2, Int(c2));
      tail.add_term(3, Int(c3));
      Leaf candidate(1, tail);
      if (relate(child, candidate) == LeafRelation::Inside) {
        ++containing;
        CHECK(candidate == expected);
      }
    }
  CHECK(containing == 1);
}

TEST_CASE("join against the ancestor scan") {
  Leaf a(0, x_power(2));
  Leaf b(0, LaurentPoly::parse("-X^3"));
  // brute-force scan over the truncation levels
  Leaf expect = [&] {
    for (long long k = 0;; ++k) {
      if (a.tail.part_above(k) == b.tail.part_above(k)) return Leaf(k, a.tail.part_above(k));
    }
  }();
  CHECK(join(a, b) == expect);
  CHECK(join(a, b) == Leaf(3, LaurentPoly()));
  Leaf v(-1, LaurentPoly::parse("X^2-X"));
  CHECK(join(v, v) == v);
  CHECK(join(v, parent(v)) == parent(v));
}

TEST_CASE("tree horograding and the quotient grading") {
  Leaf base(0, LaurentPoly());
  CHECK(tree_horograding(Leaf(4, LaurentPoly()), base) == 4);
  CHECK(tree_horograding(base, base) == 0);
  CHECK(tree_horograding(Leaf(0, x_power(1)), base) == 0);

  Gen gen(42);
  for (int i = 0; i < 300; ++i) {
    Leaf v = gen.leaf();
    WreathElement e = gen.element();
    CHECK(quotient_by_L(act_leaf(lamp_at(3), v)) == quotient_by_L(v));
    CHECK(quotient_by_L(act_leaf(e, v)) == quotient_by_L(v) + e.shift);
  }
  CHECK(quotient_by_L(base) == 0);
  WreathElement mixed{x_power(2), 5};
  Leaf v = Leaf(-1, LaurentPoly::parse("X^2"));
  CHECK(quotient_by_L(act_leaf(mixed, v)) - quotient_by_L(v) == 5);
}

TEST_CASE("germs") {
  CHECK(germ_plus(LaurentPoly::parse("X^4+2X")) == 4);
  CHECK(germ_plus(x_power(1)) == 1);
  // minimal-membership oracle: smallest m >= 0 whose base-chain leaf holds P
  LaurentPoly p = LaurentPoly::parse("X^4+2X");
  long long by_scan = -1;
  for (long long m = 0; m <= 6; ++m)
    if (leaf_contains(Leaf(m, LaurentPoly()), p)) {
      by_scan = m;
      break;
    }
  CHECK(by_scan == germ_plus(p));
  // equivariance along the shift
  LaurentPoly shifted = act_config(gen_g(), p);
  CHECK(shifted == LaurentPoly::parse("X^5+2X^2"));
  CHECK(germ_plus(shifted) == germ_plus(p) + 1);

  CHECK(germ_minus(LaurentPoly::parse("-X^3+5")) == 3);
  CHECK_THROWS_AS(germ_plus(LaurentPoly::constant(2)), std::invalid_argument);
  CHECK_THROWS_AS(germ_plus(LaurentPoly::parse("-X^2")), std::invalid_argument);
  CHECK_THROWS_AS(germ_minus(x_power(2)), std::invalid_argument);
}

TEST_CASE("germ_bound") {
  Leaf base(0, LaurentPoly());
  CHECK(germ_bound(gen_g()) == base);
  CHECK(germ_bound(identity()) == base);
  CHECK(germ_bound(WreathElement{x_power(3), 0}) == Leaf(3, LaurentPoly()));
}

TEST_CASE("lamination property suites") {
  CHECK(check_noncrossing(51, 3000).pass);
  CHECK(check_claim1(52, 4).pass);
  CHECK(check_discreteness(53, 1500).pass);
  CHECK(check_tree_axioms(54, 400).pass);
  CHECK(check_horograding_equivariance(55, 2000).pass);
  CHECK(check_quotient_equivariance(56, 500).pass);
  CHECK(check_germ_equivariance(57, 400).pass);
  CHECK(check_branching_transitivity(58, 500).pass);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvline/gen.hpp"
#include "solvline/lamination.hpp"
#include "solvline/verify.hpp"

using namespace solvline;

namespace {

// Saturation surrogate: the sup (inf) of a leaf approached by members with a
// huge positive (negative) lamp exponent.
LaurentPoly saturate(const Cut& c, long long k) {
  switch (c.kind) {
    case Cut::Kind::Config: return c.config;
    case Cut::Kind::LeafSup:
      return c.leaf.tail + LaurentPoly::monomial(c.leaf.level, Int(k));
    case Cut::Kind::LeafInf:
      return c.leaf.tail + LaurentPoly::monomial(c.leaf.level, Int(-k));
  }
  return c.config;
}

}  // namespace

TEST_CASE("compare_cut basics") {
  Leaf base(0, LaurentPoly());
  Cut zero = Cut::at_config(LaurentPoly());
  Cut sup = Cut::leaf_sup(base);
  // a member sits below the unattained sup
  CHECK(compare_cut(zero, sup, OrderTag::MaxPlus) == Ordering::Less);
  // X is above the whole base leaf; saturation oracle: X beats every member
  Cut x_cut = Cut::at_config(x_power(1));
  CHECK(compare_cut(sup, x_cut, OrderTag::MaxPlus) == Ordering::Less);
  for (long long k : {-1000000LL, 1000000LL})
    CHECK(compare(saturate(sup, k), x_power(1), OrderTag::MaxPlus) == Ordering::Less);
  CHECK(compare_cut(sup, sup, OrderTag::MaxPlus) == Ordering::Equal);
  CHECK(compare_cut(x_cut, x_cut, OrderTag::MinMinus) == Ordering::Equal);
}

TEST_CASE("sup and inf of nested and disjoint leaves") {
  Leaf base(0, LaurentPoly());
  Leaf above(1, LaurentPoly());
  CHECK(compare_cut(Cut::leaf_sup(base), Cut::leaf_sup(above), OrderTag::MaxPlus) ==
        Ordering::Less);
  CHECK(compare_cut(Cut::leaf_inf(base), Cut::leaf_inf(above), OrderTag::MaxPlus) ==
        Ordering::Greater);
  CHECK(compare_cut(Cut::leaf_inf(base), Cut::leaf_sup(base), OrderTag::MaxPlus) ==
        Ordering::Less);
  // neighbors with no configuration in between share the boundary cut
  Leaf right(0, x_power(1));
  CHECK(compare_cut(Cut::leaf_sup(base), Cut::leaf_inf(right), OrderTag::MaxPlus) ==
        Ordering::Equal);
  CHECK(compare_cut(Cut::leaf_inf(right), Cut::leaf_sup(base), OrderTag::MaxPlus) ==
        Ordering::Equal);
  // with a gap, order is strict: between base and the leaf at 2X sits X
  Leaf far(0, LaurentPoly::parse("2X"));
  CHECK(compare_cut(Cut::leaf_sup(base), Cut::leaf_inf(far), OrderTag::MaxPlus) ==
        Ordering::Less);
  CHECK(compare_cut(Cut::leaf_sup(base), Cut::at_config(x_power(1)), OrderTag::MaxPlus) ==
        Ordering::Less);
  CHECK(compare_cut(Cut::at_config(x_power(1)), Cut::leaf_inf(far), OrderTag::MaxPlus) ==
        Ordering::Less);
  // sign convention: the MaxMinus unit is -X^{level+1}
  Leaf left_minus(0, LaurentPoly::parse("-X"));
  CHECK(compare_cut(Cut::leaf_sup(base), Cut::leaf_inf(left_minus), OrderTag::MaxMinus) ==
        Ordering::Equal);
}

TEST_CASE("cut order is total and transitive on random cuts") {
  Gen gen(71);
  auto random_cut = [&]() -> Cut {
    long long kind = gen.pick(0, 2);
    if (kind == 0) return Cut::at_config(gen.poly(-3, 3, 2));
    Leaf l = gen.leaf(-3, 3, 5, 2);
    return kind == 1 ? Cut::leaf_sup(l) : Cut::leaf_inf(l);
  };
  for (int i = 0; i < 3000; ++i) {
    Cut a = random_cut(), b = random_cut(), c = random_cut();
    Ordering ab = compare_cut(a, b, OrderTag::MaxPlus);
    CHECK(flip(ab) == compare_cut(b, a, OrderTag::MaxPlus));
    if (ab == Ordering::Less &&
        compare_cut(b, c, OrderTag::MaxPlus) == Ordering::Less)
      CHECK(compare_cut(a, c, OrderTag::MaxPlus) == Ordering::Less);
    if (ab == Ordering::Equal && compare_cut(b, c, OrderTag::MaxPlus) == Ordering::Equal)
      CHECK(compare_cut(a, c, OrderTag::MaxPlus) == Ordering::Equal);
  }
  CHECK(check_cut_saturation(72, 2000).pass);
}

TEST_CASE("domination certificate") {
  // the orbit of 0 under the base lamp stays in the base leaf; its level-one
  // conjugate moves that leaf right
  WreathElement h = domination_certificate(gen_h0(), LaurentPoly());
  CHECK(h == lamp_at(1));
  Leaf l0 = domination_bounding_leaf(gen_h0(), LaurentPoly());
  CHECK(l0 == Leaf(0, LaurentPoly()));
  for (long long n = -50; n <= 50; ++n) {
    LaurentPoly orbit = act_config(power(gen_h0(), n), LaurentPoly());
    CHECK(leaf_contains(l0, orbit));
    CHECK(compare(act_config(inv(h), LaurentPoly()), orbit, OrderTag::MaxPlus) == Ordering::Less);
    CHECK(compare(orbit, act_config(h, LaurentPoly()), OrderTag::MaxPlus) == Ordering::Less);
  }

  WreathElement h2 = domination_certificate(gen_h0(), x_power(5));
  for (long long n = -50; n <= 50; ++n) {
    LaurentPoly orbit = act_config(power(gen_h0(), n), x_power(5));
    CHECK(compare(act_config(inv(h2), x_power(5)), orbit, OrderTag::MaxPlus) == Ordering::Less);
    CHECK(compare(orbit, act_config(h2, x_power(5)), OrderTag::MaxPlus) == Ordering::Less);
  }

  CHECK_THROWS_AS(domination_certificate(gen_g(), LaurentPoly()), std::invalid_argument);
  CHECK_THROWS_AS(domination_certificate(identity(), LaurentPoly()), std::invalid_argument);
  CHECK(check_domination(73, 60).pass);
}

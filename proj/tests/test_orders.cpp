#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvline/gen.hpp"
#include "solvline/orders.hpp"
#include "solvline/verify.hpp"
#include "solvline/wreath.hpp"

using namespace solvline;

namespace {

// Brute-force sign rule straight from the definition, kept independent of
// solvline::sign.
Sign sign_oracle(const LaurentPoly& p, OrderTag tag) {
  if (p.is_zero()) return Sign::Zero;
  long long extremal = is_max(tag) ? p.top_degree() : p.low_degree();
  Int c = p.coeff(extremal);
  if (is_plus(tag)) return c > 0 ? Sign::Pos : Sign::Neg;
  return c < 0 ? Sign::Pos : Sign::Neg;
}

}  // namespace

TEST_CASE("sign of the extremal coefficient") {
  CHECK(sign(LaurentPoly::parse("X^3-7X"), OrderTag::MaxPlus) == Sign::Pos);
  for (OrderTag tag : {OrderTag::MaxPlus, OrderTag::MaxMinus, OrderTag::MinPlus,
                       OrderTag::MinMinus})
    CHECK(sign(LaurentPoly(), tag) == Sign::Zero);
  CHECK(sign(LaurentPoly::parse("X^-2-5X"), OrderTag::MinPlus) == Sign::Pos);

  Gen gen(21);
  for (int i = 0; i < 2000; ++i) {
    LaurentPoly p = gen.poly(-5, 5, 4);
    for (OrderTag tag : {OrderTag::MaxPlus, OrderTag::MaxMinus, OrderTag::MinPlus,
                         OrderTag::MinMinus})
      CHECK(sign(p, tag) == sign_oracle(p, tag));
  }
}

TEST_CASE("compare") {
  CHECK(compare(LaurentPoly(), LaurentPoly::parse("X-100"), OrderTag::MaxPlus) == Ordering::Less);
  LaurentPoly p = LaurentPoly::parse("X^2-X^-3");
  CHECK(compare(p, p, OrderTag::MinMinus) == Ordering::Equal);
  // sign(2X^2 - X^2, MaxMinus) = Neg, so X^2 comes after 2X^2
  CHECK(sign_oracle(LaurentPoly::parse("X^2"), OrderTag::MaxMinus) == Sign::Neg);
  CHECK(compare(LaurentPoly::parse("X^2"), LaurentPoly::parse("2X^2"), OrderTag::MaxMinus) ==
        Ordering::Greater);
}

TEST_CASE("between: frozen examples verified by two compares") {
  LaurentPoly zero;
  LaurentPoly mid = between(zero, LaurentPoly::parse("X^2"), OrderTag::MaxPlus);
  CHECK(mid == LaurentPoly::parse("X^2-X"));
  CHECK(compare(zero, mid, OrderTag::MaxPlus) == Ordering::Less);
  CHECK(compare(mid, LaurentPoly::parse("X^2"), OrderTag::MaxPlus) == Ordering::Less);

  LaurentPoly mid2 = between(LaurentPoly::parse("-1"), LaurentPoly::parse("1"), OrderTag::MaxPlus);
  CHECK(mid2 == LaurentPoly::parse("1-X^-1"));
  CHECK(compare(LaurentPoly::parse("-1"), mid2, OrderTag::MaxPlus) == Ordering::Less);
  CHECK(compare(mid2, LaurentPoly::parse("1"), OrderTag::MaxPlus) == Ordering::Less);

  // P vs its image under the level-one lamp, used by the minimality probe
  LaurentPoly p = LaurentPoly::parse("X^-2+4");
  LaurentPoly image = act_config(lamp_at(1), p);
  LaurentPoly mid3 = between(p, image, OrderTag::MaxPlus);
  CHECK(mid3 == p + LaurentPoly::parse("X-1"));
  CHECK(compare(p, mid3, OrderTag::MaxPlus) == Ordering::Less);
  CHECK(compare(mid3, image, OrderTag::MaxPlus) == Ordering::Less);

  CHECK_THROWS_AS(between(LaurentPoly::parse("X^2"), zero, OrderTag::MaxPlus),
                  std::invalid_argument);
  CHECK_THROWS_AS(between(p, p, OrderTag::MinPlus), std::invalid_argument);
}

TEST_CASE("BElement arithmetic and the left order") {
  BElement dbl = BElement::doubling();
  BElement tr = BElement::translation();
  // exact evaluation at the base point: 2*sqrt2-2 < sqrt2
  CHECK(xi0_image(dbl) == QuadVal{2, -2});
  CHECK(xi0_image(tr) == QuadVal{1, 0});
  CHECK(compare_B(dbl, tr) == Ordering::Less);
  BElement b(0, -3);
  CHECK(compare_B(b, b) == Ordering::Equal);
  CHECK(xi0_image(b) == QuadVal{1, -4});
  CHECK(compare_B(b, BElement(2, 0)) == Ordering::Less);
  // the doubled-doubling map with a unit pullback fixes a rational point but
  // not the base point
  BElement quad(2, -1);
  CHECK(quad.apply(Rat(1, 3)) == Rat(1, 3));
  CHECK(compare_B(quad, BElement::identity()) != Ordering::Equal);

  // composition against direct evaluation
  Gen gen(22);
  for (int i = 0; i < 500; ++i) {
    BElement b1 = gen.belement(), b2 = gen.belement();
    Rat x = Rat(Int(gen.pick(-20, 20)), Int(gen.pick(1, 8)));
    CHECK(b1.compose(b2).apply(x) == b1.apply(b2.apply(x)));
    CHECK(b1.compose(b1.inverse()) == BElement::identity());
  }
  CHECK(dbl.power(3) == BElement(3, 0));
  CHECK(tr.power(-2) == BElement(0, -2));
  CHECK_THROWS_AS(BElement(0, Rat(1, 3)), std::invalid_argument);
}

TEST_CASE("order property suites") {
  CHECK(check_order_invariance(31, 2000).pass);
  CHECK(check_order_totality(32, 3000).pass);
  CHECK(check_between(33, 500).pass);
  CHECK(check_compare_b(34, 1000).pass);
  CHECK(check_xi0_freeness(35, 1000).pass);
}

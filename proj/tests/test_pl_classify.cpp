#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvline/classify.hpp"
#include "solvline/gen.hpp"
#include "solvline/realization.hpp"
#include "solvline/verify.hpp"

using namespace solvline;

TEST_CASE("affine map parsing and algebra") {
  AffineMap m = parse_affine("3x+1");
  CHECK(m.slope == 3);
  CHECK(m.offset == 1);
  CHECK(parse_affine("x-2") == AffineMap(1, -2));
  CHECK(parse_affine("1/2 x + 3/4") == AffineMap(Rat(1, 2), Rat(3, 4)));
  CHECK(parse_affine("x") == AffineMap(1, 0));
  CHECK_THROWS_AS(parse_affine("5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_affine("-2x+1"), std::invalid_argument);
  CHECK(m.compose(m.inverse()) == AffineMap(1, 0));
  CHECK(m.str() == "3x+1");
}

TEST_CASE("PLMap algebra") {
  PLMap id = PLMap::identity();
  CHECK(id.is_identity());
  PLMap dbl = PLMap::affine(AffineMap(2, 0));
  CHECK(dbl.eval(Rat(3)) == 6);
  CHECK(dbl.inverse().eval(Rat(6)) == 3);
  CHECK(dbl.compose(dbl.inverse()).is_identity());

  PLMap kink = PLMap::from_nodes({{Rat(0), Rat(0)}, {Rat(1), Rat(2)}}, 1, 3);
  CHECK(kink.eval(Rat(1, 2)) == 1);
  CHECK(kink.eval(Rat(2)) == 5);
  CHECK(kink.eval(Rat(-1)) == -1);
  CHECK(kink.inverse().inverse() == kink);
  PLMap round_trip = kink.compose(kink.inverse());
  CHECK(round_trip.is_identity());
  // composition agrees with pointwise evaluation
  Gen gen(91);
  PLMap other = PLMap::from_nodes({{Rat(-1), Rat(0)}, {Rat(2), Rat(1)}}, Rat(1, 2), 2);
  PLMap comp = kink.compose(other);
  for (int i = 0; i < 100; ++i) {
    Rat x(Int(gen.pick(-40, 40)), Int(gen.pick(1, 7)));
    CHECK(comp.eval(x) == kink.eval(other.eval(x)));
  }
  CHECK_THROWS_AS(PLMap::from_nodes({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(PLMap::from_nodes({{Rat(0), Rat(0)}}, 0, 1), std::invalid_argument);
}

TEST_CASE("pl_fixed_points") {
  CHECK(pl_fixed_points(PLMap::identity()).whole_line);
  FixedSet dbl = pl_fixed_points(PLMap::affine(AffineMap(2, 0)));
  REQUIRE(dbl.single_point());
  CHECK(dbl.points[0] == 0);

  // three-breakpoint map with a fixed plateau on [0, 1]
  PLMap plateau = PLMap::from_nodes(
      {{Rat(-1), Rat(-2)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(3)}}, 1, 1);
  FixedSet fs = pl_fixed_points(plateau);
  REQUIRE(fs.intervals.size() == 1);
  CHECK(fs.intervals[0] == std::pair<Rat, Rat>(0, 1));
  CHECK(fs.points.empty());
  // grid oracle: scan a fine rational grid and compare membership
  for (long long num = -30; num <= 30; ++num) {
    Rat x(num, 10);
    bool fixed = plateau.eval(x) == x;
    CHECK(fixed == fs.contains(x));
  }
}

TEST_CASE("classify_affine frozen examples") {
  AffineClassification c = classify_affine(parse_affine("x+2"), parse_affine("3x+1"));
  CHECK(c.label == ClassLabel::non_abelian_affine(3, 1));
  REQUIRE(c.witness);
  // witness = (x + 1/2)/2
  CHECK(*c.witness == AffineMap(Rat(1, 2), Rat(1, 4)));
  CHECK(c.witness->compose(parse_affine("3x+1")).compose(c.witness->inverse()) ==
        AffineMap(3, 0));
  CHECK(c.witness->compose(parse_affine("x+2")).compose(c.witness->inverse()) ==
        AffineMap(1, 1));

  CHECK(classify_affine(parse_affine("x+1"), parse_affine("x+2")).label ==
        ClassLabel::translations(1, 2));
  CHECK(classify_affine(parse_affine("x"), parse_affine("x+1")).label == ClassLabel::cyclic());
  CHECK(classify_affine(parse_affine("x"), parse_affine("2x")).label == ClassLabel::reducible());
  CHECK(classify_affine(parse_affine("x"), parse_affine("x")).label == ClassLabel::reducible());
  // homothety lamp fixing the same point as g: global fixed point
  CHECK(classify_affine(parse_affine("2x"), parse_affine("3x")).label ==
        ClassLabel::reducible());
  // homothety lamp moved by g: the relations fail
  CHECK_THROWS_AS(classify_affine(parse_affine("2x"), parse_affine("x+1")),
                  std::invalid_argument);
  CHECK(check_affine_classifier(92, 120).pass);
}

TEST_CASE("element types") {
  CHECK(element_type(gen_g(), OrderTag::MaxPlus) == ElementType::ExpandingHomothety);
  CHECK(element_type(gen_g(), OrderTag::MinPlus) == ElementType::ContractingHomothety);
  CHECK(element_type(WreathElement{LaurentPoly::parse("X^3-X"), 0}, OrderTag::MaxPlus) ==
        ElementType::TotallyBounded);
  CHECK(element_type(identity(), OrderTag::MinMinus) == ElementType::Identity);
  CHECK(check_element_typing(93, 120).pass);
}

TEST_CASE("classify_pl") {
  PLMap g = PLMap::affine(AffineMap(2, 0));
  PLMap h0 = PLMap::affine(AffineMap(1, 1));
  CHECK(classify_pl(g, h0, 8) == ClassLabel::non_abelian_affine(2, 1));
  CHECK(classify_pl(PLMap::identity(), PLMap::identity(), 3) == ClassLabel::reducible());
  // commuting fixed-point-free translations
  CHECK(classify_pl(PLMap::affine(AffineMap(1, 2)), PLMap::affine(AffineMap(1, 3)), 3) ==
        ClassLabel::translations(3, 2));
  CHECK_THROWS_AS(classify_pl(g, h0, 0), std::invalid_argument);
  CHECK(check_classify_pl_corpus(94, 30).pass);
}

TEST_CASE("realized Plante window is recognized") {
  Realization r = Realization::build(500, OrderTag::MaxPlus);
  PLMap gw = r.pl_window(gen_g(), Rat(-4), Rat(4));
  PLMap hw = r.pl_window(gen_h0(), Rat(-4), Rat(4));
  ClassLabel label = classify_pl(gw, hw, 4);
  CHECK(label == ClassLabel::plante_like(OrderTag::MaxPlus));
}

TEST_CASE("disjointness and growth") {
  DisjointnessReport r22 = disjointness_check(2, 2, OrderTag::MaxPlus);
  CHECK(r22.leaves.size() == 4);
  CHECK(r22.pairs_checked == 6);
  CHECK(r22.all_disjoint);
  DisjointnessReport r11 = disjointness_check(1, 1, OrderTag::MaxPlus);
  CHECK(r11.leaves.size() == 1);
  CHECK(r11.all_disjoint);
  DisjointnessReport r33 = disjointness_check(3, 3, OrderTag::MaxPlus);
  CHECK(r33.leaves.size() == 27);
  CHECK(r33.pairs_checked == 351);
  CHECK(r33.all_disjoint);
  CHECK(r33.level == -4);

  CHECK(c1_growth_predicate(1, 1, 0, 1) == 1);
  // (99/100)^8 * 3/2, exactly
  Rat expected = Rat(3, 2);
  for (int i = 0; i < 8; ++i) expected *= Rat(99, 100);
  CHECK(c1_growth_predicate(Rat(1, 2), 3, Rat(1, 100), 1) == expected);
  Rat prev = c1_growth_predicate(Rat(3, 2), 2, Rat(1, 100), 1);
  CHECK(prev > 1);
  for (std::size_t n = 2; n <= 6; ++n) {
    Rat cur = c1_growth_predicate(Rat(3, 2), 2, Rat(1, 100), n);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(check_growth_predicate(95, 10).pass);
}

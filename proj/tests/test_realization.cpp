#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "solvline/gen.hpp"
#include "solvline/realization.hpp"
#include "solvline/verify.hpp"

using namespace solvline;

TEST_CASE("configuration enumeration") {
  CHECK(enumerate_config(0).is_zero());
  // injectivity over a prefix
  std::set<LaurentPoly> seen;
  for (std::size_t i = 0; i < 5000; ++i) {
    auto [it, fresh] = seen.insert(enumerate_config(i));
    CHECK(fresh);
  }
  // exhaustiveness: everything in the window [-2,2] with coefficients in
  // [-2,2] appears within the shell cutoff
  std::size_t cutoff = shell_cutoff(2);
  CHECK(cutoff == 3125);
  std::set<LaurentPoly> prefix;
  for (std::size_t i = 0; i < cutoff; ++i) prefix.insert(enumerate_config(i));
  long long missing = 0;
  std::vector<long long> digits(5, -2);
  while (true) {
    LaurentPoly p;
    for (int j = 0; j < 5; ++j) p.add_term(j - 2, Int(digits[j]));
    if (prefix.count(p) == 0) ++missing;
    int j = 0;
    for (; j < 5; ++j) {
      if (digits[j] < 2) {
        ++digits[j];
        break;
      }
      digits[j] = -2;
    }
    if (j == 5) break;
  }
  CHECK(missing == 0);
}

TEST_CASE("rational enumeration") {
  CHECK(cw_rational(0) == 0);
  CHECK(cw_rational(1) == 1);
  CHECK(cw_rational(2) == -1);
  CHECK(cw_rational(3) == Rat(1, 2));
  std::set<Rat> seen;
  for (std::size_t i = 0; i < 2000; ++i) {
    auto [it, fresh] = seen.insert(cw_rational(i));
    CHECK(fresh);
  }
  // hits the integers reasonably early
  CHECK(seen.count(Rat(4)) == 1);
  CHECK(seen.count(Rat(-4)) == 1);
}

TEST_CASE("build rules") {
  Realization r = Realization::build(1, OrderTag::MaxPlus);
  CHECK(r.coord(LaurentPoly()) == 0);  // first insertion

  Realization deep = Realization::build(120, OrderTag::MaxPlus);
  // all-pairs order preservation at modest depth
  const auto& entries = deep.entries();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      CHECK(compare(entries[i].first, entries[j].first, OrderTag::MaxPlus) == Ordering::Less);
      CHECK(entries[i].second < entries[j].second);
    }
  // monotone in depth
  Realization shallow = Realization::build(60, OrderTag::MaxPlus);
  for (const auto& [p, q] : shallow.entries()) {
    auto assigned = deep.coord_if_assigned(p);
    REQUIRE(assigned);
    CHECK(*assigned == q);
  }
  CHECK(check_realization_determinism(150).pass);
  CHECK(check_realization_order(100).pass);
}

TEST_CASE("coord is stable and order preserving on demand") {
  Realization r = Realization::build(50, OrderTag::MaxPlus);
  LaurentPoly p = LaurentPoly::parse("7X^5-3X^-4");
  Rat q1 = r.coord(p);
  Rat q2 = r.coord(p);
  CHECK(q1 == q2);
  Gen gen(81);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = gen.poly(-5, 5, 4), b = gen.poly(-5, 5, 4);
    Ordering o = compare(a, b, OrderTag::MaxPlus);
    if (o == Ordering::Equal) continue;
    bool lt = r.coord(a) < r.coord(b);
    CHECK(lt == (o == Ordering::Less));
  }
}

TEST_CASE("act_point") {
  Realization r = Realization::build(60, OrderTag::MaxPlus);
  Rat qx = r.coord(x_power(1));
  CHECK(r.act_point(gen_g(), qx) == r.coord(x_power(2)));
  CHECK(r.act_point(identity(), qx) == qx);
  Gen gen(82);
  for (int i = 0; i < 200; ++i) {
    WreathElement a = gen.element(2, 3, 2), b = gen.element(2, 3, 2);
    Rat q = r.coord(gen.poly(-3, 3, 2));
    CHECK(r.act_point(mul(a, b), q) == r.act_point(a, r.act_point(b, q)));
  }
  // unrealized coordinates are rejected with a diagnostic
  Rat weird(355, 113);
  REQUIRE(!r.is_realized(weird));
  CHECK_THROWS_WITH_AS(r.act_point(gen_g(), weird), doctest::Contains("nearest realized"),
                       std::domain_error);
}

TEST_CASE("pl_window") {
  Realization r = Realization::build(200, OrderTag::MaxPlus);
  PLMap ident = r.pl_window(identity(), Rat(-2), Rat(2));
  CHECK(ident.is_identity());

  // the window interpolates the realized action exactly at the nodes it was
  // built from (later extensions refine the realization between them)
  std::vector<Rat> nodes = r.realized_in(Rat(-2), Rat(2));
  PLMap gw = r.pl_window(gen_g(), Rat(-2), Rat(2));
  for (const Rat& q : nodes) CHECK(gw.eval(q) == r.act_point(gen_g(), q));
  // composing with the inverse window fixes those nodes whose forward image
  // stays in the window
  PLMap gi = r.pl_window(inv(gen_g()), Rat(-2), Rat(2));
  std::size_t fixed = 0;
  for (const Rat& q : nodes) {
    Rat forward = gw.eval(q);
    if (forward < Rat(-2) || forward > Rat(2)) continue;
    CHECK(gi.eval(forward) == q);
    ++fixed;
  }
  CHECK(fixed > 10);
  CHECK_THROWS_AS(r.pl_window(gen_g(), Rat(0), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(r.pl_window(gen_g(), Rat(355, 113), Rat(4)), std::invalid_argument);
}

TEST_CASE("minimality probe") {
  // rescaling by five places X^5 at the constant 1, inside (-X, X)
  WreathElement w =
      minimality_probe(x_power(1).negated(), x_power(1), x_power(5), OrderTag::MaxPlus);
  CHECK(w == WreathElement{LaurentPoly(), -5});
  LaurentPoly image = act_config(w, x_power(5));
  CHECK(compare(x_power(1).negated(), image, OrderTag::MaxPlus) == Ordering::Less);
  CHECK(compare(image, x_power(1), OrderTag::MaxPlus) == Ordering::Less);

  // containment case: the identity witness is allowed
  WreathElement w2 = minimality_probe(LaurentPoly::parse("-X"), x_power(1),
                                      LaurentPoly::constant(1), OrderTag::MaxPlus);
  CHECK(w2 == identity());

  CHECK_THROWS_AS(minimality_probe(x_power(1), x_power(1).negated(), LaurentPoly(),
                                   OrderTag::MaxPlus),
                  std::invalid_argument);
  CHECK(check_minimality_probe(83, 150).pass);
}

TEST_CASE("sigma injectivity and orbit density") {
  CHECK(check_sigma_injectivity(150).pass);
  CHECK(check_orbit_density(260).pass);
  CHECK(check_realization_equivariance(84, 80, 60).pass);
}

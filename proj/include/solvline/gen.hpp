#pragma once

#include <cstdint>
#include <random>

#include "solvline/counterexample.hpp"
#include "solvline/lamination.hpp"
#include "solvline/orders.hpp"
#include "solvline/wreath.hpp"

namespace solvline {

/// Deterministic generators shared by the property suites and tests.
/// Plain modular draws keep the streams identical across platforms.
struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long long pick(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return rng() % 2 == 0; }

  LaurentPoly poly(long long deg_lo, long long deg_hi, long long coeff_bound,
                   long long max_terms = 4) {
    LaurentPoly p;
    long long terms = pick(0, max_terms);
    for (long long i = 0; i < terms; ++i)
      p.add_term(pick(deg_lo, deg_hi), Int(pick(-coeff_bound, coeff_bound)));
    return p;
  }

  LaurentPoly nonzero_poly(long long deg_lo, long long deg_hi, long long coeff_bound) {
    while (true) {
      LaurentPoly p = poly(deg_lo, deg_hi, coeff_bound);
      if (!p.is_zero()) return p;
    }
  }

  WreathElement element(long long shift_bound = 3, long long deg_bound = 4,
                        long long coeff_bound = 3) {
    return WreathElement{poly(-deg_bound, deg_bound, coeff_bound), pick(-shift_bound, shift_bound)};
  }

  Leaf leaf(long long level_lo = -6, long long level_hi = 6, long long tail_deg = 8,
            long long coeff_bound = 3) {
    long long level = pick(level_lo, level_hi);
    LaurentPoly tail;
    long long terms = pick(0, 3);
    for (long long i = 0; i < terms && level + 1 <= tail_deg; ++i)
      tail.add_term(pick(level + 1, tail_deg), Int(pick(-coeff_bound, coeff_bound)));
    return Leaf(level, tail.part_above(level));
  }

  BElement belement(long long m_bound = 2, long long num_bound = 4, unsigned pow_bound = 2) {
    Int den = 1;
    den <<= static_cast<unsigned>(pick(0, pow_bound));
    return BElement(pick(-m_bound, m_bound), Rat(Int(pick(-num_bound, num_bound)), den));
  }

  BElement belement_nonidentity(long long m_bound = 2, long long num_bound = 4,
                                unsigned pow_bound = 2) {
    while (true) {
      BElement b = belement(m_bound, num_bound, pow_bound);
      if (!b.is_identity()) return b;
    }
  }

  BConfig bconfig(long long keys = 3, long long value_bound = 4) {
    BConfig f;
    long long n = pick(0, keys);
    for (long long i = 0; i < n; ++i) f.add(belement(1, 3, 1), pick(-value_bound, value_bound));
    return f;
  }

  GBElement gbelement() { return GBElement{bconfig(), belement()}; }
};

}  // namespace solvline

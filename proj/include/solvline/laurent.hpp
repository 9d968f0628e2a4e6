#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace solvline {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Sparse integer Laurent polynomial: the additive group of lamp
/// configurations, with the generator shift acting by degree translation.
///
/// Invariant: no stored coefficient is zero, so equality is structural and
/// iteration order (ascending degree) is the canonical serialization order.
class LaurentPoly {
 public:
  using TermMap = std::map<long long, Int>;

  LaurentPoly() = default;

  static LaurentPoly monomial(long long degree, Int coeff);
  static LaurentPoly constant(Int value) { return monomial(0, std::move(value)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(long long degree) const;

  /// Degree of the highest stored term. Throws std::logic_error on zero.
  long long top_degree() const;
  /// Degree of the lowest stored term. Throws std::logic_error on zero.
  long long low_degree() const;

  /// Terms of degree strictly greater than n.
  LaurentPoly part_above(long long n) const;

  /// X^k * P (degree shift).
  LaurentPoly shifted(long long k) const;

  LaurentPoly negated() const;

  /// P(X) -> P(X^{-1}).
  LaurentPoly reflected() const;

  void add_term(long long degree, const Int& coeff);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const LaurentPoly& other) const { return terms_ != other.terms_; }

  /// Structural order for container keys only; not one of the invariant orders.
  bool operator<(const LaurentPoly& other) const { return terms_ < other.terms_; }

  /// Human form, ascending degree, e.g. "-3+2X^-1+X^2".
  std::string str() const;

  /// Parses the str() grammar: signed terms "cX^d", "cX", "X^d", "c".
  static LaurentPoly parse(const std::string& text);

 private:
  TermMap terms_;
};

/// Convenience: the monomial X^degree.
LaurentPoly x_power(long long degree);

/// "p" or "p/q" form of an exact rational.
std::string rat_str(const Rat& r);
/// Parses "p" or "p/q".
Rat parse_rat(const std::string& text);

}  // namespace solvline

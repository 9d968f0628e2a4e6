#pragma once

#include <string>

#include "solvline/laurent.hpp"

namespace solvline {

/// The four invariant lexicographic orders on Laurent polynomials.
/// Max orders read the highest-degree coefficient, Min orders the lowest;
/// Plus means a positive extremal coefficient is positive for the order,
/// Minus inverts the sign convention.
enum class OrderTag { MaxPlus, MaxMinus, MinPlus, MinMinus };

enum class Sign { Neg, Zero, Pos };
enum class Ordering { Less, Equal, Greater };

constexpr bool is_max(OrderTag t) { return t == OrderTag::MaxPlus || t == OrderTag::MaxMinus; }
constexpr bool is_plus(OrderTag t) { return t == OrderTag::MaxPlus || t == OrderTag::MinPlus; }

std::string to_string(OrderTag t);
/// Parses "max+", "max-", "min+", "min-".
OrderTag parse_order_tag(const std::string& s);

std::string to_string(Ordering o);

Sign sign(const LaurentPoly& p, OrderTag tag);

/// Total order induced by sign(q - p, tag).
Ordering compare(const LaurentPoly& p, const LaurentPoly& q, OrderTag tag);

/// A configuration strictly between q1 and q2 (deterministic rule: subtract
/// the order's positive unit one degree step inside the dominant side of
/// q2 - q1). Throws std::invalid_argument unless q1 strictly precedes q2.
LaurentPoly between(const LaurentPoly& q1, const LaurentPoly& q2, OrderTag tag);

Ordering flip(Ordering o);

/// An element of the affine base group generated by x -> 2x and x -> x+1:
/// the map x -> 2^m x + d with d a dyadic rational.
class BElement {
 public:
  BElement() : m_(0), offset_(0) {}
  BElement(long long log2slope, Rat offset);

  static BElement identity() { return BElement(); }
  /// x -> 2x
  static BElement doubling() { return BElement(1, 0); }
  /// x -> x+1
  static BElement translation() { return BElement(0, 1); }

  long long log2slope() const { return m_; }
  const Rat& offset() const { return offset_; }

  Int offset_num() const;
  unsigned offset_den_pow2() const;

  Rat apply(const Rat& x) const;

  BElement compose(const BElement& rhs) const;  // this after rhs
  BElement inverse() const;
  BElement power(long long n) const;

  bool is_identity() const { return m_ == 0 && offset_ == 0; }

  bool operator==(const BElement& other) const {
    return m_ == other.m_ && offset_ == other.offset_;
  }
  bool operator!=(const BElement& other) const { return !(*this == other); }
  /// Structural order for container keys; the left order is compare_B.
  bool operator<(const BElement& other) const {
    if (m_ != other.m_) return m_ < other.m_;
    return offset_ < other.offset_;
  }

  std::string str() const;

 private:
  long long m_;
  Rat offset_;
};

/// Value a*sqrt(2) + b in the real quadratic field, with exact sign.
struct QuadVal {
  Rat a = 0, b = 0;

  int sgn() const;
  bool operator==(const QuadVal& other) const { return a == other.a && b == other.b; }
  bool operator!=(const QuadVal& other) const { return !(*this == other); }
  bool operator<(const QuadVal& other) const;
  bool operator>(const QuadVal& other) const { return other < *this; }
  std::string str() const;
};

/// Image of the base point sqrt(2)-1 under the map. The orbit of this point
/// is free: a stabilizing element would equate a nonzero rational multiple of
/// sqrt(2) with a rational. (Every rational point is stabilized by some
/// element of the group, so a free base point must be irrational.)
QuadVal xi0_image(const BElement& b);

/// The left order b1 < b2 iff b1(xi0) < b2(xi0), exact in the quadratic field.
Ordering compare_B(const BElement& b1, const BElement& b2);

}  // namespace solvline

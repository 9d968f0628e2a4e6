#pragma once

#include <map>
#include <string>

#include "solvline/orders.hpp"

namespace solvline {

/// Finitely supported integer configuration over the affine base group;
/// stored values are never zero.
class BConfig {
 public:
  using Map = std::map<BElement, long long>;

  BConfig() = default;
  static BConfig delta(const BElement& b, long long value = 1);

  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  long long value_at(const BElement& b) const;
  void add(const BElement& b, long long value);

  friend BConfig operator+(const BConfig& a, const BConfig& b);
  BConfig negated() const;

  /// Keys right-multiplied by r (the right-regular twist direction).
  BConfig keys_right_multiplied(const BElement& r) const;
  /// Keys left-multiplied by b (the shift action of the base group).
  BConfig keys_left_multiplied(const BElement& b) const;
  /// Entries with key strictly above b in the left order.
  BConfig restricted_above(const BElement& b) const;

  bool operator==(const BConfig& other) const { return entries_ == other.entries_; }
  bool operator!=(const BConfig& other) const { return entries_ != other.entries_; }
  std::string str() const;

 private:
  Map entries_;
};

/// Element of the wreath product of the integers over the affine base group,
/// in normal form (configuration, base).
struct GBElement {
  BConfig config;
  BElement base;

  bool is_identity() const { return config.is_zero() && base.is_identity(); }
  bool operator==(const GBElement& other) const {
    return config == other.config && base == other.base;
  }
  bool operator!=(const GBElement& other) const { return !(*this == other); }
  std::string str() const;
};

GBElement gb_identity();
GBElement mul_gb(const GBElement& a, const GBElement& b);
GBElement inv_gb(const GBElement& a);

/// The affine action on configurations: (r, b).f = r + shift_b(f).
BConfig act_bconfig(const GBElement& e, const BConfig& f);

/// Lexicographic comparison at the maximal disagreement key of the left order.
Ordering compare_bconfig(const BConfig& f1, const BConfig& f2);

/// The twisting automorphism power: configuration keys right-multiplied by
/// t^-n (t the unit translation), base unchanged.
GBElement tau_n(const GBElement& e, long long n);

/// Maximum of supp(f) t^-n in the left order. Throws on the zero config.
BElement maxsupp_after_twist(const BConfig& f, long long n);

/// Supremum cut of the leaf of configurations agreeing with `tail` strictly
/// above `base`; canonical (the factory restricts the tail).
struct BCut {
  BConfig tail;
  BElement base;

  static BCut cut(const BConfig& config, const BElement& base);
  bool operator==(const BCut& other) const { return tail == other.tail && base == other.base; }
  std::string str() const;
};

Ordering compare_bcut(const BCut& c1, const BCut& c2);

/// Image of a cut under the group action.
BCut act_bcut(const GBElement& e, const BCut& c);

/// Ordering of the twisted base-point images of g1, g2 at twist power n,
/// computed symbolically at the cut level.
Ordering base_orbit_compare(const GBElement& g1, const GBElement& g2, long long n);

struct StabilizationResult {
  bool stabilized = false;
  std::size_t N = 0;            // least n certified by the analytic bound with
                                // the ordering stable from there through cap
  std::size_t first_agree = 0;  // least n from which the ordering matches through cap
  Ordering order = Ordering::Equal;
};

/// Scans twist powers 0..cap. Requires distinct bases; throws otherwise.
StabilizationResult stabilization_N(const GBElement& g1, const GBElement& g2, std::size_t cap);

}  // namespace solvline

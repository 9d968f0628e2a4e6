#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvline/lamination.hpp"
#include "solvline/orders.hpp"
#include "solvline/pl.hpp"
#include "solvline/wreath.hpp"

namespace solvline {

/// Canonical enumeration of all Laurent polynomials: shells by the common
/// bound s on |degree| and |coefficient|, lexicographic on the coefficient
/// vector within a shell. enumerate_config(0) is the zero configuration.
LaurentPoly enumerate_config(std::size_t i);

/// Index bound such that every polynomial with support in [-s, s] and
/// coefficients in [-s, s] appears among the first shell_cutoff(s) indices.
std::size_t shell_cutoff(std::size_t s);

/// Canonical enumeration of the rationals: 0, then the Calkin-Wilf sequence
/// interleaved with its negatives.
Rat cw_rational(std::size_t i);

/// Deterministic partial order-isomorphism from the ordered configuration set
/// into the rationals, built by back-and-forth rounds. Extension mutates
/// internal state: confine an instance to one thread of control at a time.
class Realization {
 public:
  using Enumeration = std::function<LaurentPoly(std::size_t)>;

  explicit Realization(OrderTag tag);

  /// depth rounds of (next unassigned configuration, next unhit rational).
  static Realization build(std::size_t depth, OrderTag tag);
  static Realization build_with(std::size_t depth, OrderTag tag, Enumeration enumeration);

  OrderTag tag() const { return tag_; }
  std::size_t size() const { return entries_.size(); }

  /// Assigned coordinate, extending the map deterministically if absent.
  Rat coord(const LaurentPoly& p);
  std::optional<Rat> coord_if_assigned(const LaurentPoly& p) const;

  bool is_realized(const Rat& q) const;
  const LaurentPoly* config_at(const Rat& q) const;

  /// Image of a realized coordinate under the element's action. Throws
  /// std::domain_error naming the nearest realized coordinates otherwise.
  Rat act_point(const WreathElement& e, const Rat& q);

  /// Monotone PL interpolant through every realized (q, act_point(q)) pair in
  /// the window, extended with unit slope outside. Window endpoints must be
  /// realized and in order.
  PLMap pl_window(const WreathElement& e, const Rat& lo, const Rat& hi);

  /// Entries in ascending configuration order (equivalently coordinate order).
  const std::vector<std::pair<LaurentPoly, Rat>>& entries() const { return entries_; }

  /// Realized coordinates inside [lo, hi], ascending.
  std::vector<Rat> realized_in(const Rat& lo, const Rat& hi) const;

  /// Canonical text form, one "config|coord" line per entry; equal strings
  /// mean bit-identical realizations.
  std::string serialize() const;

 private:
  OrderTag tag_;
  Enumeration enumeration_;
  std::vector<std::pair<LaurentPoly, Rat>> entries_;  // ascending in the order
  std::map<LaurentPoly, Rat> by_config_;
  std::map<Rat, LaurentPoly> by_coord_;
  std::size_t enum_cursor_ = 0;
  std::size_t rat_cursor_ = 0;

  std::size_t order_position(const LaurentPoly& p) const;
  void insert_at(std::size_t idx, const LaurentPoly& p, const Rat& q);
  Rat insert_config(const LaurentPoly& p);
  void forward_round();
  void backward_round();
  LaurentPoly extremal_above() const;
  LaurentPoly extremal_below() const;
};

/// Witness w with q1 < w.x < q2 in the chosen order, built from the midpoint
/// configuration and the smallest rescaling that sandwiches x. Always
/// succeeds; throws std::invalid_argument unless q1 strictly precedes q2.
WreathElement minimality_probe(const LaurentPoly& q1, const LaurentPoly& q2,
                               const LaurentPoly& x, OrderTag tag);

}  // namespace solvline

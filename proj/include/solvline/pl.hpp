#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvline/laurent.hpp"

namespace solvline {

/// Orientation-preserving affine self-map x -> slope*x + offset, slope > 0.
struct AffineMap {
  Rat slope = 1;
  Rat offset = 0;

  AffineMap() = default;
  AffineMap(Rat slope_, Rat offset_);

  Rat apply(const Rat& x) const { return slope * x + offset; }
  AffineMap compose(const AffineMap& rhs) const;  // this after rhs
  AffineMap inverse() const;
  bool is_identity() const { return slope == 1 && offset == 0; }
  bool operator==(const AffineMap& other) const {
    return slope == other.slope && offset == other.offset;
  }
  bool operator!=(const AffineMap& other) const { return !(*this == other); }
  std::string str() const;
};

/// Parses "ax+b" with rational a, b ("p/q" literals); "3x+1", "x-2", "x", "2x".
AffineMap parse_affine(const std::string& text);

/// Strictly increasing piecewise-linear bijection of the line with finitely
/// many rational breakpoints and affine ends. Canonical form: collinear
/// interior nodes are merged, so equality is field equality; a pure affine
/// map keeps a single anchor node.
class PLMap {
 public:
  PLMap();  // identity

  static PLMap identity() { return PLMap(); }
  static PLMap affine(const AffineMap& m);
  /// Nodes must be strictly increasing in both coordinates; end slopes > 0.
  static PLMap from_nodes(std::vector<std::pair<Rat, Rat>> nodes, Rat left_slope, Rat right_slope);

  const std::vector<Rat>& xs() const { return xs_; }
  const std::vector<Rat>& ys() const { return ys_; }
  const Rat& left_slope() const { return lslope_; }
  const Rat& right_slope() const { return rslope_; }

  Rat eval(const Rat& x) const;
  Rat eval_inverse(const Rat& y) const;

  PLMap compose(const PLMap& rhs) const;  // this after rhs
  PLMap inverse() const;
  PLMap power(long long n) const;

  bool is_identity() const;
  bool is_affine() const { return xs_.size() == 1; }
  std::optional<AffineMap> as_affine() const;

  bool operator==(const PLMap& other) const;
  bool operator!=(const PLMap& other) const { return !(*this == other); }

  std::string str() const;

 private:
  std::vector<Rat> xs_, ys_;
  Rat lslope_, rslope_;
  void canonicalize();
  friend struct PLMapAccess;
};

/// Exact fixed set of a PL homeomorphism: isolated points, maximal closed
/// bounded intervals, and possibly closed rays or the whole line.
struct FixedSet {
  bool whole_line = false;
  std::optional<Rat> left_ray_end;    // fixed on (-inf, value]
  std::optional<Rat> right_ray_start; // fixed on [value, +inf)
  std::vector<Rat> points;
  std::vector<std::pair<Rat, Rat>> intervals;

  bool empty() const {
    return !whole_line && !left_ray_end && !right_ray_start && points.empty() &&
           intervals.empty();
  }
  bool single_point() const {
    return !whole_line && !left_ray_end && !right_ray_start && intervals.empty() &&
           points.size() == 1;
  }
  bool contains(const Rat& x) const;
};

FixedSet pl_fixed_points(const PLMap& m);

}  // namespace solvline

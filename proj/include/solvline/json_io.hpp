#pragma once

#include <json.hpp>

#include <string>

#include "solvline/classify.hpp"
#include "solvline/counterexample.hpp"
#include "solvline/lamination.hpp"
#include "solvline/orders.hpp"
#include "solvline/pl.hpp"
#include "solvline/wreath.hpp"

namespace solvline {

using Json = nlohmann::ordered_json;

// {"<degree>": <coeff>, ...}, ascending degree; coefficients beyond the
// 64-bit range are carried as decimal strings.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"lamp": {...}, "shift": <int>}
Json to_json(const WreathElement& e);
WreathElement wreath_from_json(const Json& j);

// {"m": int, "d_num": int, "d_den_pow2": nat}
Json to_json(const BElement& b);
BElement belement_from_json(const Json& j);

// [{"b": {...}, "v": int}, ...] in canonical key order
Json to_json(const BConfig& f);
BConfig bconfig_from_json(const Json& j);

// {"config": [...], "base": {...}}
Json to_json(const GBElement& e);
GBElement gbelement_from_json(const Json& j);

// {"slope": "p/q", "offset": "p/q"}
Json to_json(const AffineMap& m);
AffineMap affine_from_json(const Json& j);

// {"xs": [...], "ys": [...], "left_slope": "...", "right_slope": "..."}
Json to_json(const PLMap& m);
PLMap plmap_from_json(const Json& j);

/// Input description for the classifiers: an affine pair, a symbolic
/// realized action, a PL pair, or a wreath-over-base pair.
struct ActionSpec {
  enum class Kind { Affine, Plante, PL, WreathB };
  Kind kind = Kind::Affine;
  AffineMap g_affine, h0_affine;
  OrderTag tag = OrderTag::MaxPlus;
  PLMap g_pl, h0_pl;
  GBElement g1, g2;
};

Json to_json(const ActionSpec& spec);
ActionSpec action_spec_from_json(const Json& j);

}  // namespace solvline

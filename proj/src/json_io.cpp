#include "solvline/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace solvline {

namespace {

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [d, c] : p.terms()) j[std::to_string(d)] = int_to_json(c);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.add_term(std::stoll(it.key()), int_from_json(it.value()));
  return p;
}

Json to_json(const WreathElement& e) {
  return Json{{"lamp", to_json(e.lamp)}, {"shift", e.shift}};
}

WreathElement wreath_from_json(const Json& j) {
  return WreathElement{laurent_from_json(j.at("lamp")), j.at("shift").get<long long>()};
}

Json to_json(const BElement& b) {
  return Json{{"m", b.log2slope()},
              {"d_num", int_to_json(b.offset_num())},
              {"d_den_pow2", b.offset_den_pow2()}};
}

BElement belement_from_json(const Json& j) {
  Int num = int_from_json(j.at("d_num"));
  unsigned pow = j.at("d_den_pow2").get<unsigned>();
  Int den = 1;
  den <<= pow;
  return BElement(j.at("m").get<long long>(), Rat(num, den));
}

Json to_json(const BConfig& f) {
  Json arr = Json::array();
  for (const auto& [k, v] : f.entries()) arr.push_back(Json{{"b", to_json(k)}, {"v", v}});
  return arr;
}

BConfig bconfig_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("configuration JSON must be an array");
  BConfig f;
  for (const auto& item : j)
    f.add(belement_from_json(item.at("b")), item.at("v").get<long long>());
  return f;
}

Json to_json(const GBElement& e) {
  return Json{{"config", to_json(e.config)}, {"base", to_json(e.base)}};
}

GBElement gbelement_from_json(const Json& j) {
  return GBElement{bconfig_from_json(j.at("config")), belement_from_json(j.at("base"))};
}

Json to_json(const AffineMap& m) {
  return Json{{"slope", rat_str(m.slope)}, {"offset", rat_str(m.offset)}};
}

AffineMap affine_from_json(const Json& j) {
  return AffineMap(parse_rat(j.at("slope").get<std::string>()),
                   parse_rat(j.at("offset").get<std::string>()));
}

Json to_json(const PLMap& m) {
  Json xs = Json::array(), ys = Json::array();
  for (const Rat& x : m.xs()) xs.push_back(rat_str(x));
  for (const Rat& y : m.ys()) ys.push_back(rat_str(y));
  return Json{{"xs", xs},
              {"ys", ys},
              {"left_slope", rat_str(m.left_slope())},
              {"right_slope", rat_str(m.right_slope())}};
}

PLMap plmap_from_json(const Json& j) {
  std::vector<std::pair<Rat, Rat>> nodes;
  const Json& xs = j.at("xs");
  const Json& ys = j.at("ys");
  if (xs.size() != ys.size()) throw std::invalid_argument("PL map JSON: xs/ys size mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i)
    nodes.emplace_back(parse_rat(xs[i].get<std::string>()), parse_rat(ys[i].get<std::string>()));
  return PLMap::from_nodes(std::move(nodes), parse_rat(j.at("left_slope").get<std::string>()),
                           parse_rat(j.at("right_slope").get<std::string>()));
}

Json to_json(const ActionSpec& spec) {
  switch (spec.kind) {
    case ActionSpec::Kind::Affine:
      return Json{{"kind", "affine"}, {"g", to_json(spec.g_affine)}, {"h0", to_json(spec.h0_affine)}};
    case ActionSpec::Kind::Plante:
      return Json{{"kind", "plante"}, {"order", to_string(spec.tag)}};
    case ActionSpec::Kind::PL:
      return Json{{"kind", "pl"}, {"g", to_json(spec.g_pl)}, {"h0", to_json(spec.h0_pl)}};
    case ActionSpec::Kind::WreathB:
      return Json{{"kind", "wreath_b"}, {"g1", to_json(spec.g1)}, {"g2", to_json(spec.g2)}};
  }
  throw std::logic_error("unreachable");
}

ActionSpec action_spec_from_json(const Json& j) {
  ActionSpec spec;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") {
    spec.kind = ActionSpec::Kind::Affine;
    spec.g_affine = affine_from_json(j.at("g"));
    spec.h0_affine = affine_from_json(j.at("h0"));
  } else if (kind == "plante") {
    spec.kind = ActionSpec::Kind::Plante;
    spec.tag = parse_order_tag(j.at("order").get<std::string>());
  } else if (kind == "pl") {
    spec.kind = ActionSpec::Kind::PL;
    spec.g_pl = plmap_from_json(j.at("g"));
    spec.h0_pl = plmap_from_json(j.at("h0"));
  } else if (kind == "wreath_b") {
    spec.kind = ActionSpec::Kind::WreathB;
    spec.g1 = gbelement_from_json(j.at("g1"));
    spec.g2 = gbelement_from_json(j.at("g2"));
  } else {
    throw std::invalid_argument("unknown action spec kind '" + kind + "'");
  }
  return spec;
}

}  // namespace solvline

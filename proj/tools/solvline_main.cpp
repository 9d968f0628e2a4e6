#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "solvline/classify.hpp"
#include "solvline/counterexample.hpp"
#include "solvline/gen.hpp"
#include "solvline/json_io.hpp"
#include "solvline/lamination.hpp"
#include "solvline/orders.hpp"
#include "solvline/realization.hpp"
#include "solvline/svg.hpp"
#include "solvline/verify.hpp"
#include "solvline/wreath.hpp"

using namespace solvline;

namespace {

struct Range {
  long long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("range must look like a..b, got '" + text + "'");
  Range r;
  r.lo = std::stoll(text.substr(0, pos));
  r.hi = std::stoll(text.substr(pos + 2));
  if (r.lo > r.hi) throw CLI::ValidationError("empty range '" + text + "'");
  return r;
}

std::pair<Rat, Rat> parse_rat_window(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("window must look like a..b, got '" + text + "'");
  return {parse_rat(text.substr(0, pos)), parse_rat(text.substr(pos + 2))};
}

Json parse_json_arg(const std::string& text) {
  // inline JSON or @file
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw CLI::ValidationError("cannot open file '" + text.substr(1) + "'");
    return Json::parse(in);
  }
  return Json::parse(text);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

double to_double(const Rat& r) {
  return static_cast<double>(numerator(r).convert_to<double>() /
                             denominator(r).convert_to<double>());
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("SOLVLINE_SEED")) return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

std::string affine_witness_str(const AffineMap& g, const Rat& alpha) {
  // (x - p)/|alpha| with p the fixed point of g
  Rat p = g.offset / (1 - g.slope);
  Rat denom = alpha < 0 ? -alpha : alpha;
  std::string inner = "x";
  if (p < 0) inner += "+" + rat_str(-p);
  if (p > 0) inner += "-" + rat_str(p);
  if (denom == 1) return inner;
  return "(" + inner + ")/" + rat_str(denom);
}

int run_claim1(const Range& nr, const Range& kr, OrderTag tag) {
  std::size_t checked = 0;
  Gen gen(7);
  for (long long n = nr.lo; n <= nr.hi; ++n) {
    long long bounding = is_max(tag) ? n + 1 : n - 1;
    WreathElement upper = lamp_at(bounding);
    WreathElement lower = inv(upper);
    if (!is_plus(tag)) std::swap(upper, lower);
    for (int rep = 0; rep < 100; ++rep) {
      LaurentPoly p = gen.poly(-6, 6, 4);
      for (long long k = kr.lo; k <= kr.hi; ++k) {
        ++checked;
        LaurentPoly mid = act_config(power(lamp_at(n), k), p);
        if (compare(act_config(lower, p), mid, tag) != Ordering::Less ||
            compare(mid, act_config(upper, p), tag) != Ordering::Less) {
          std::cout << "FAIL\tn=" << n << "\tk=" << k << "\tP=" << p.str() << "\n";
          return 1;
        }
      }
    }
  }
  std::cout << "PASS\tchecked=" << checked << "\n";
  return 0;
}

void enumerate_tails(long long level, long long max_deg, long long coeff_bound,
                     std::vector<LaurentPoly>& out) {
  // all tails supported in (level, max_deg] with coefficients in the bound
  std::vector<long long> degrees;
  for (long long d = level + 1; d <= max_deg; ++d) degrees.push_back(d);
  std::vector<long long> digits(degrees.size(), -coeff_bound);
  if (degrees.empty()) {
    out.push_back(LaurentPoly());
    return;
  }
  while (true) {
    LaurentPoly tail;
    for (std::size_t i = 0; i < degrees.size(); ++i) tail.add_term(degrees[i], Int(digits[i]));
    out.push_back(tail);
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (digits[i] < coeff_bound) {
        ++digits[i];
        break;
      }
      digits[i] = -coeff_bound;
    }
    if (i == digits.size()) break;
  }
}

int run_lamination_leaves(const Range& levels, long long tail_deg, long long coeff_bound,
                          OrderTag tag, const std::string& out_path) {
  std::ostringstream os;
  os << "level\ttail\thor\tparent_level\tparent_tail\n";
  for (long long level = levels.lo; level <= levels.hi; ++level) {
    std::vector<LaurentPoly> tails;
    enumerate_tails(level, tail_deg, coeff_bound, tails);
    for (const LaurentPoly& tail : tails) {
      Leaf leaf(level, tail);
      Leaf up = parent(leaf);
      os << level << "\t" << tail.str() << "\t" << hor(leaf) << "\t" << up.level << "\t"
         << up.tail.str() << "\n";
    }
  }
  (void)tag;
  write_output(out_path, os.str());
  return 0;
}

int run_lamination_render(const std::string& svg_path, const std::pair<Rat, Rat>& window,
                          std::size_t depth, const Range& levels) {
  Realization r = Realization::build(depth, OrderTag::MaxPlus);
  std::vector<Rat> realized = r.realized_in(window.first, window.second);
  // group the realized points into leaves per level and draw each hull
  double xlo = to_double(window.first), xhi = to_double(window.second);
  double height = (xhi - xlo) / 2.2;
  SvgWriter svg(xlo, xhi, -height * 0.08, height, 900, 480);
  svg.line(xlo, 0, xhi, 0, "#222", 1.0);
  const char* palette[] = {"#2266aa", "#aa5522", "#22aa66", "#aa2266", "#6622aa", "#667722"};
  for (long long level = levels.lo; level <= levels.hi; ++level) {
    std::map<Leaf, std::pair<Rat, Rat>> hulls;
    for (const Rat& q : realized) {
      const LaurentPoly* p = r.config_at(q);
      Leaf leaf = leaf_of(level, *p);
      auto [it, fresh] = hulls.emplace(leaf, std::make_pair(q, q));
      if (!fresh) {
        if (q < it->second.first) it->second.first = q;
        if (q > it->second.second) it->second.second = q;
      }
    }
    const char* color = palette[((level % 6) + 6) % 6];
    for (const auto& [leaf, hull] : hulls) {
      if (hull.first == hull.second) continue;
      svg.semicircle(to_double(hull.first), to_double(hull.second), color, 1.1);
    }
  }
  for (const Rat& q : realized) svg.circle(to_double(q), 0, 1.2, "#777");
  svg.text(xlo + 0.02 * (xhi - xlo), height * 0.93,
           "leaf hulls over realized points, levels " + std::to_string(levels.lo) + ".." +
               std::to_string(levels.hi));
  write_output(svg_path, svg.finish());
  return 0;
}

int run_realize(OrderTag tag, std::size_t depth, const std::pair<Rat, Rat>& window,
                const std::string& word_text, const std::string& emit,
                const std::string& out_path) {
  Realization r = Realization::build(depth, tag);
  WreathElement e = eval_word(parse_word(word_text));
  if (!r.is_realized(window.first) || !r.is_realized(window.second))
    throw std::invalid_argument("window endpoints are not realized at this depth");
  PLMap map = r.pl_window(e, window.first, window.second);
  std::vector<Rat> nodes = r.realized_in(window.first, window.second);
  if (emit == "tsv") {
    std::ostringstream os;
    os << "q\timage\tconfig\n";
    for (const Rat& q : nodes)
      os << rat_str(q) << "\t" << rat_str(map.eval(q)) << "\t" << r.config_at(q)->str() << "\n";
    write_output(out_path, os.str());
    return 0;
  }
  // SVG graph with realized nodes marked
  double lo = to_double(window.first), hi = to_double(window.second);
  double ylo = to_double(map.eval(window.first)), yhi = to_double(map.eval(window.second));
  double pad = (hi - lo) * 0.05;
  SvgWriter svg(lo - pad, hi + pad, std::min(ylo, lo) - pad, std::max(yhi, hi) + pad, 700, 700);
  svg.line(lo, lo, hi, hi, "#bbb", 0.8);
  std::ostringstream path;
  bool started = false;
  for (const Rat& q : nodes) svg.move_or_line(path, started, to_double(q), to_double(map.eval(q)));
  svg.polyline(path.str(), "#2266aa", 1.5);
  for (const Rat& q : nodes) svg.circle(to_double(q), to_double(map.eval(q)), 1.6, "#cc3333");
  svg.text(lo, yhi, "word '" + word_text + "' on the realized window, depth " +
                        std::to_string(depth));
  write_output(out_path, svg.finish());
  return 0;
}

int run_classify_pl(const ActionSpec& spec, std::size_t depth) {
  switch (spec.kind) {
    case ActionSpec::Kind::Affine: {
      AffineClassification c = classify_affine(spec.h0_affine, spec.g_affine);
      std::cout << c.label.str() << "\n";
      return 0;
    }
    case ActionSpec::Kind::PL: {
      ClassLabel label = classify_pl(spec.g_pl, spec.h0_pl, depth);
      std::cout << label.str() << "\n";
      return 0;
    }
    case ActionSpec::Kind::Plante: {
      // realize the symbolic action, then classify its window
      Realization r = Realization::build(500, spec.tag);
      PLMap gw = r.pl_window(gen_g(), Rat(-4), Rat(4));
      PLMap hw = r.pl_window(gen_h0(), Rat(-4), Rat(4));
      std::cout << classify_pl(gw, hw, depth).str() << "\n";
      return 0;
    }
    case ActionSpec::Kind::WreathB:
      throw std::invalid_argument("classify pl: wreath_b specs belong to 'counterexample'");
  }
  return 1;
}

int run_stabilize(const GBElement& g1, const GBElement& g2, std::size_t cap,
                  const std::string& out_path) {
  std::ostringstream os;
  os << "n\tordering\tanalytic\n";
  for (std::size_t n = 0; n <= cap; ++n) {
    Ordering o = base_orbit_compare(g1, g2, static_cast<long long>(n));
    auto analytic_at = [&](const GBElement& g) {
      return g.config.is_zero() ||
             compare_B(maxsupp_after_twist(g.config, static_cast<long long>(n)), g.base) ==
                 Ordering::Less;
    };
    os << n << "\t" << to_string(o) << "\t"
       << ((analytic_at(g1) && analytic_at(g2)) ? "yes" : "no") << "\n";
  }
  StabilizationResult res = stabilization_N(g1, g2, cap);
  if (res.stabilized)
    os << "# stabilized\tN=" << res.N << "\tfirst_agree=" << res.first_agree << "\torder="
       << to_string(res.order) << "\n";
  else
    os << "# NotStabilizedBy(" << cap << ")\n";
  write_output(out_path, os.str());
  return res.stabilized ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic toolkit for solvable group actions on the line"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "seed for randomized commands (SOLVLINE_SEED overrides)");

  std::string word_text, a_json, b_json, config_text, p_text, q_text, order_text = "max+";
  std::string b1_json, b2_json, out_path, svg_path, emit = "tsv", window_text = "-4..4";
  std::string levels_text = "-2..2", n_range_text = "-5..5", k_range_text = "-20..20";
  std::string g_text, h0_text, spec_text, g1_json, g2_json, element_json;
  std::string lambda_text = "1", eps_text = "0";
  long long tail_deg = 3, coeff_bound = 1;
  std::size_t depth = 200, classify_depth = 8, big_n = 3, small_n = 3, cap = 50;
  std::size_t growth_n = 1;

  // wreath
  CLI::App* wreath = app.add_subcommand("wreath", "group algebra in normal form");
  CLI::App* weval = wreath->add_subcommand("eval", "evaluate a generator word");
  weval->add_option("--word", word_text, "tokens g G h H, space separated")->required();
  CLI::App* wmul = wreath->add_subcommand("mul", "multiply two elements");
  wmul->add_option("--a", a_json, "element JSON")->required();
  wmul->add_option("--b", b_json, "element JSON")->required();
  CLI::App* winv = wreath->add_subcommand("inv", "invert an element");
  winv->add_option("--a", a_json, "element JSON")->required();
  CLI::App* wconj = wreath->add_subcommand("conj", "conjugate b by a");
  wconj->add_option("--a", a_json, "element JSON")->required();
  wconj->add_option("--b", b_json, "element JSON")->required();
  CLI::App* wact = wreath->add_subcommand("act", "act on a configuration");
  wact->add_option("--element", a_json, "element JSON")->required();
  wact->add_option("--config", config_text, "Laurent polynomial")->required();
  CLI::App* wfit = wreath->add_subcommand("fitting", "lamp subgroup membership");
  wfit->add_option("--element", a_json, "element JSON")->required();

  // orders
  CLI::App* orders = app.add_subcommand("orders", "invariant orders and the base order");
  CLI::App* ocomp = orders->add_subcommand("compare", "compare two configurations");
  ocomp->add_option("--p", p_text)->required();
  ocomp->add_option("--q", q_text)->required();
  ocomp->add_option("--order", order_text, "max+|max-|min+|min-");
  CLI::App* osign = orders->add_subcommand("sign", "sign of a configuration");
  osign->add_option("--p", p_text)->required();
  osign->add_option("--order", order_text);
  CLI::App* obetween = orders->add_subcommand("between", "strict midpoint configuration");
  obetween->add_option("--p", p_text)->required();
  obetween->add_option("--q", q_text)->required();
  obetween->add_option("--order", order_text);
  CLI::App* ocompb = orders->add_subcommand("compare-b", "left order on the base group");
  ocompb->add_option("--b1", b1_json, "base element JSON")->required();
  ocompb->add_option("--b2", b2_json, "base element JSON")->required();

  // plante
  CLI::App* plante = app.add_subcommand("plante", "checks on the symbolic laminar action");
  CLI::App* claim1 = plante->add_subcommand("check-claim1", "lamp sandwich inclusion sweep");
  claim1->add_option("--n", n_range_text, "level range a..b");
  claim1->add_option("--k", k_range_text, "exponent range a..b");
  claim1->add_option("--order", order_text);

  // lamination
  CLI::App* lam = app.add_subcommand("lamination", "leaf keys, tree, rendering");
  CLI::App* leaves = lam->add_subcommand("leaves", "enumerate leaf keys as TSV");
  leaves->add_option("--level-range", levels_text, "levels a..b");
  leaves->add_option("--tail-deg", tail_deg, "max tail degree");
  leaves->add_option("--coeff-bound", coeff_bound, "tail coefficient bound");
  leaves->add_option("--order", order_text);
  leaves->add_option("--out", out_path, "output file (default stdout)");
  CLI::App* render = lam->add_subcommand("render", "draw leaves as half-plane semicircles");
  render->add_option("--svg", svg_path, "output SVG file")->required();
  render->add_option("--window", window_text, "coordinate window a..b");
  render->add_option("--depth", depth, "realization depth");
  render->add_option("--levels", levels_text, "levels a..b");

  // realize
  CLI::App* realize = app.add_subcommand("realize", "back-and-forth realization");
  realize->add_option("--order", order_text);
  realize->add_option("--depth", depth, "rounds")
      ->check(CLI::Range(std::size_t(1), std::size_t(1000000)));
  realize->add_option("--window", window_text, "window a..b");
  realize->add_option("--element", word_text, "generator word");
  realize->add_option("--emit", emit, "tsv|svg");
  realize->add_option("--out", out_path, "output file (default stdout)");

  // classify
  CLI::App* classify = app.add_subcommand("classify", "semi-conjugacy classification");
  CLI::App* caff = classify->add_subcommand("affine", "classify an affine pair");
  caff->add_option("--g", g_text, "affine map, e.g. 3x+1")->required();
  caff->add_option("--h0", h0_text, "affine map, e.g. x+2")->required();
  CLI::App* cpl = classify->add_subcommand("pl", "classify a PL or spec-described pair");
  cpl->add_option("--spec", spec_text, "action spec JSON (inline or @file)")->required();
  cpl->add_option("--depth", classify_depth, "verification depth")->check(CLI::PositiveNumber);
  CLI::App* cel = classify->add_subcommand("element", "dynamical type of an element");
  cel->add_option("--element", element_json, "element JSON")->required();
  cel->add_option("--order", order_text);

  // c1
  CLI::App* c1 = app.add_subcommand("c1", "regularity obstruction ingredients");
  CLI::App* cdis = c1->add_subcommand("disjoint", "disjoint leaf images for lamp tuples");
  cdis->add_option("--N", big_n, "exponent bound")->check(CLI::PositiveNumber);
  cdis->add_option("--n", small_n, "tuple length")->check(CLI::PositiveNumber);
  cdis->add_option("--order", order_text);
  cdis->add_option("--emit", emit, "tsv");
  cdis->add_option("--out", out_path, "output file (default stdout)");
  CLI::App* cgr = c1->add_subcommand("growth", "exact growth factor power");
  cgr->add_option("--lambda", lambda_text, "rational > 0")->required();
  cgr->add_option("--N", big_n)->check(CLI::PositiveNumber);
  cgr->add_option("--eps", eps_text, "rational in [0,1)");
  cgr->add_option("--n", growth_n, "power")->check(CLI::PositiveNumber);

  // counterexample
  CLI::App* ce = app.add_subcommand("counterexample", "twisted wreath actions over the base");
  CLI::App* stab = ce->add_subcommand("stabilize", "base-point order stabilization scan");
  stab->add_option("--g1", g1_json, "element JSON (inline or @file)")->required();
  stab->add_option("--g2", g2_json, "element JSON (inline or @file)")->required();
  stab->add_option("--cap", cap, "twist cap");
  stab->add_option("--emit", emit, "tsv");
  stab->add_option("--out", out_path, "output file (default stdout)");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run every module's invariant suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (weval->parsed()) {
      std::cout << to_json(eval_word(parse_word(word_text))).dump() << "\n";
    } else if (wmul->parsed()) {
      std::cout << to_json(mul(wreath_from_json(parse_json_arg(a_json)),
                               wreath_from_json(parse_json_arg(b_json))))
                       .dump()
                << "\n";
    } else if (winv->parsed()) {
      std::cout << to_json(inv(wreath_from_json(parse_json_arg(a_json)))).dump() << "\n";
    } else if (wconj->parsed()) {
      std::cout << to_json(conj(wreath_from_json(parse_json_arg(a_json)),
                                wreath_from_json(parse_json_arg(b_json))))
                       .dump()
                << "\n";
    } else if (wact->parsed()) {
      std::cout << act_config(wreath_from_json(parse_json_arg(a_json)),
                              LaurentPoly::parse(config_text))
                       .str()
                << "\n";
    } else if (wfit->parsed()) {
      std::cout << (is_in_fitting(wreath_from_json(parse_json_arg(a_json))) ? "true" : "false")
                << "\n";
    } else if (ocomp->parsed()) {
      std::cout << to_string(compare(LaurentPoly::parse(p_text), LaurentPoly::parse(q_text),
                                     parse_order_tag(order_text)))
                << "\n";
    } else if (osign->parsed()) {
      Sign s = sign(LaurentPoly::parse(p_text), parse_order_tag(order_text));
      std::cout << (s == Sign::Zero ? "Zero" : s == Sign::Pos ? "Pos" : "Neg") << "\n";
    } else if (obetween->parsed()) {
      std::cout << between(LaurentPoly::parse(p_text), LaurentPoly::parse(q_text),
                           parse_order_tag(order_text))
                       .str()
                << "\n";
    } else if (ocompb->parsed()) {
      std::cout << to_string(compare_B(belement_from_json(parse_json_arg(b1_json)),
                                       belement_from_json(parse_json_arg(b2_json))))
                << "\n";
    } else if (claim1->parsed()) {
      return run_claim1(parse_range(n_range_text), parse_range(k_range_text),
                        parse_order_tag(order_text));
    } else if (leaves->parsed()) {
      return run_lamination_leaves(parse_range(levels_text), tail_deg, coeff_bound,
                                   parse_order_tag(order_text), out_path);
    } else if (render->parsed()) {
      return run_lamination_render(svg_path, parse_rat_window(window_text), depth,
                                   parse_range(levels_text));
    } else if (realize->parsed()) {
      return run_realize(parse_order_tag(order_text), depth, parse_rat_window(window_text),
                         word_text, emit, out_path);
    } else if (caff->parsed()) {
      AffineMap g = parse_affine(g_text);
      AffineMap h0 = parse_affine(h0_text);
      AffineClassification c = classify_affine(h0, g);
      switch (c.label.kind) {
        case LabelKind::NonAbelianAffine:
          std::cout << "NonAbelianAffine\t" << rat_str(c.label.lambda) << "\t"
                    << (c.label.lamp_sign > 0 ? "+" : "-") << "\twitness="
                    << affine_witness_str(g, h0.offset);
          break;
        case LabelKind::Translations:
          std::cout << "Translations\t" << c.label.ratio_a << ":" << c.label.ratio_b;
          if (c.witness) std::cout << "\twitness=" << c.witness->str();
          break;
        default:
          std::cout << c.label.str();
          if (c.witness) std::cout << "\twitness=" << c.witness->str();
      }
      std::cout << "\n";
    } else if (cpl->parsed()) {
      return run_classify_pl(action_spec_from_json(parse_json_arg(spec_text)), classify_depth);
    } else if (cel->parsed()) {
      std::cout << to_string(element_type(wreath_from_json(parse_json_arg(element_json)),
                                          parse_order_tag(order_text)))
                << "\n";
    } else if (cdis->parsed()) {
      DisjointnessReport report =
          disjointness_check(big_n, small_n, parse_order_tag(order_text));
      std::ostringstream os;
      os << "level\ttail\n";
      for (const Leaf& leaf : report.leaves) os << leaf.level << "\t" << leaf.tail.str() << "\n";
      os << "# pairwise_disjoint=" << (report.all_disjoint ? "yes" : "NO")
         << "\tpairs_checked=" << report.pairs_checked
         << "\texhaustive=" << (report.exhaustive ? "yes" : "sampled") << "\n";
      write_output(out_path, os.str());
      return report.all_disjoint ? 0 : 3;
    } else if (cgr->parsed()) {
      std::cout << rat_str(c1_growth_predicate(parse_rat(lambda_text), big_n,
                                               parse_rat(eps_text), growth_n))
                << "\n";
    } else if (stab->parsed()) {
      return run_stabilize(gbelement_from_json(parse_json_arg(g1_json)),
                           gbelement_from_json(parse_json_arg(g2_json)), cap, out_path);
    } else if (verify->parsed()) {
      bool ok = verify_all(effective_seed(seed), std::cout);
      return ok ? 0 : 4;
    } else {
      std::cerr << "no action selected\n";
      return 2;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

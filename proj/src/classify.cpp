#include "solvline/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace solvline {

ClassLabel ClassLabel::cyclic() {
  ClassLabel l;
  l.kind = LabelKind::Cyclic;
  return l;
}

ClassLabel ClassLabel::translations(const Rat& alpha, const Rat& beta) {
  ClassLabel l;
  l.kind = LabelKind::Translations;
  // reduced integer ratio with signs preserved (positive conjugacy scales
  // both offsets by the same positive factor)
  Int a = numerator(alpha) * denominator(beta);
  Int b = numerator(beta) * denominator(alpha);
  Int g = gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
  if (g != 0) {
    a /= g;
    b /= g;
  }
  l.ratio_a = a;
  l.ratio_b = b;
  return l;
}

ClassLabel ClassLabel::non_abelian_affine(Rat lambda, int lamp_sign) {
  ClassLabel l;
  l.kind = LabelKind::NonAbelianAffine;
  l.lambda = std::move(lambda);
  l.lamp_sign = lamp_sign;
  return l;
}

ClassLabel ClassLabel::plante_like(OrderTag tag) {
  ClassLabel l;
  l.kind = LabelKind::PlanteLike;
  l.tag = tag;
  return l;
}

ClassLabel ClassLabel::reducible() {
  ClassLabel l;
  l.kind = LabelKind::Reducible;
  return l;
}

ClassLabel ClassLabel::inconclusive(std::size_t depth) {
  ClassLabel l;
  l.kind = LabelKind::Inconclusive;
  l.depth = depth;
  return l;
}

bool ClassLabel::operator==(const ClassLabel& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case LabelKind::Cyclic:
    case LabelKind::Reducible:
      return true;
    case LabelKind::Translations:
      return ratio_a == other.ratio_a && ratio_b == other.ratio_b;
    case LabelKind::NonAbelianAffine:
      return lambda == other.lambda && lamp_sign == other.lamp_sign;
    case LabelKind::PlanteLike:
      return tag == other.tag;
    case LabelKind::Inconclusive:
      return depth == other.depth;
  }
  return false;
}

std::string ClassLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case LabelKind::Cyclic: os << "Cyclic"; break;
    case LabelKind::Translations:
      os << "Translations(" << ratio_a << ":" << ratio_b << ")";
      break;
    case LabelKind::NonAbelianAffine:
      os << "NonAbelianAffine(" << rat_str(lambda) << ", " << (lamp_sign > 0 ? "+" : "-") << ")";
      break;
    case LabelKind::PlanteLike: os << "PlanteLike(" << to_string(tag) << ")"; break;
    case LabelKind::Reducible: os << "Reducible"; break;
    case LabelKind::Inconclusive: os << "InconclusiveAtDepth(" << depth << ")"; break;
  }
  return os.str();
}

namespace {

AffineMap conj_by(const AffineMap& w, const AffineMap& m) {
  return w.compose(m).compose(w.inverse());
}

}  // namespace

AffineClassification classify_affine(const AffineMap& h0, const AffineMap& g) {
  if (h0.slope != 1) {
    // h0 is a homothety with fixed point p; the lamps commute only if g
    // fixes p too, which forces a global fixed point.
    Rat p = h0.offset / (1 - h0.slope);
    if (g.apply(p) == p) return {ClassLabel::reducible(), std::nullopt};
    throw std::invalid_argument(
        "classify_affine: lamp generator is a homothety whose fixed point is moved; the "
        "lamp commutation relations fail");
  }
  const Rat& alpha = h0.offset;
  if (g.slope == 1) {
    const Rat& beta = g.offset;
    if (alpha == 0 && beta == 0) return {ClassLabel::reducible(), std::nullopt};
    if (alpha == 0 || beta == 0) {
      Rat scale = alpha == 0 ? beta : alpha;
      AffineMap witness(1 / (scale < 0 ? -scale : scale), 0);
      return {ClassLabel::cyclic(), witness};
    }
    ClassLabel label = ClassLabel::translations(alpha, beta);
    // scale both offsets down to the reduced pair
    Rat scale = Rat(label.ratio_a) / alpha;
    AffineMap witness(scale < 0 ? -scale : scale, 0);
    return {label, witness};
  }
  // g is a homothety with fixed point p
  Rat p = g.offset / (1 - g.slope);
  if (alpha == 0) return {ClassLabel::reducible(), std::nullopt};
  Rat abs_alpha = alpha < 0 ? Rat(-alpha) : alpha;
  AffineMap witness(1 / abs_alpha, -p / abs_alpha);  // x -> (x - p)/|alpha|
  AffineMap g_norm = conj_by(witness, g);
  AffineMap h_norm = conj_by(witness, h0);
  if (g_norm != AffineMap(g.slope, 0) ||
      h_norm != AffineMap(1, alpha > 0 ? Rat(1) : Rat(-1)))
    throw std::logic_error("classify_affine: conjugation witness failed verification");
  return {ClassLabel::non_abelian_affine(g.slope, alpha > 0 ? 1 : -1), witness};
}

std::string to_string(ElementType t) {
  switch (t) {
    case ElementType::Identity: return "Identity";
    case ElementType::ExpandingHomothety: return "ExpandingHomothety";
    case ElementType::ContractingHomothety: return "ContractingHomothety";
    case ElementType::TotallyBounded: return "TotallyBounded";
  }
  return "?";
}

ElementType element_type(const WreathElement& e, OrderTag tag) {
  if (e.is_identity()) return ElementType::Identity;
  if (e.shift != 0) {
    bool expanding = is_max(tag) ? e.shift > 0 : e.shift < 0;
    return expanding ? ElementType::ExpandingHomothety : ElementType::ContractingHomothety;
  }
  return ElementType::TotallyBounded;
}

namespace {

// Conjugate h_n = g^n h0 g^-n for |n| <= depth, indexed n + depth.
std::vector<PLMap> pl_conjugates(const PLMap& g, const PLMap& h0, std::size_t depth) {
  std::vector<PLMap> out(2 * depth + 1, h0);
  PLMap gi = g.inverse();
  PLMap pos = h0, neg = h0;
  for (std::size_t n = 1; n <= depth; ++n) {
    pos = g.compose(pos).compose(gi);
    neg = gi.compose(neg).compose(g);
    out[depth + n] = pos;
    out[depth - n] = neg;
  }
  return out;
}

bool common_fixed_point(const PLMap& a, const PLMap& b) {
  FixedSet fa = pl_fixed_points(a);
  FixedSet fb = pl_fixed_points(b);
  if (fa.whole_line) return !fb.empty() || fb.whole_line;
  if (fb.whole_line) return !fa.empty();
  auto probe = [&](const FixedSet& from, const FixedSet& in) {
    for (const Rat& p : from.points)
      if (in.contains(p)) return true;
    for (const auto& [lo, hi] : from.intervals)
      if (in.contains(lo) || in.contains(hi)) return true;
    if (from.left_ray_end && in.contains(*from.left_ray_end)) return true;
    if (from.right_ray_start && in.contains(*from.right_ray_start)) return true;
    return false;
  };
  if (probe(fa, fb) || probe(fb, fa)) return true;
  // overlapping intervals/rays with no endpoint inside the other are covered
  // by the endpoint probes above for closed sets
  return false;
}

// Stepwise evaluator for words in g, h0 that marks a value untrusted once an
// intermediate point leaves the breakpoint span, where a finite sample of an
// action carries no information.
struct GuardedAction {
  const PLMap& g;
  PLMap g_inv;
  const PLMap& h0;
  PLMap h0_inv;
  Rat lo, hi;

  GuardedAction(const PLMap& g_, const PLMap& h0_)
      : g(g_), g_inv(g_.inverse()), h0(h0_), h0_inv(h0_.inverse()) {
    lo = std::min(g.xs().front(), h0.xs().front());
    hi = std::max(g.xs().back(), h0.xs().back());
  }

  Rat apply(const PLMap& m, const Rat& x, bool& trusted) const {
    if (x < lo || x > hi) trusted = false;
    return m.eval(x);
  }

  // h_n^k = g^n h0^k g^{-n}, applied stepwise
  Rat conjugate_power(long long n, long long k, Rat x, bool& trusted) const {
    const PLMap& down = n >= 0 ? g_inv : g;
    const PLMap& up = n >= 0 ? g : g_inv;
    long long steps = n >= 0 ? n : -n;
    for (long long j = 0; j < steps && trusted; ++j) x = apply(down, x, trusted);
    const PLMap& lamp = k >= 0 ? h0 : h0_inv;
    long long reps = k >= 0 ? k : -k;
    for (long long j = 0; j < reps && trusted; ++j) x = apply(lamp, x, trusted);
    for (long long j = 0; j < steps && trusted; ++j) x = apply(up, x, trusted);
    return x;
  }
};

}  // namespace

ClassLabel classify_pl(const PLMap& g, const PLMap& h0, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("classify_pl: depth must be >= 1");
  if (g.is_identity() && h0.is_identity()) return ClassLabel::reducible();

  if (g.is_affine() && h0.is_affine()) {
    auto ga = g.as_affine();
    auto ha = h0.as_affine();
    if (ga && ha) {
      try {
        return classify_affine(*ha, *ga).label;
      } catch (const std::invalid_argument&) {
        return ClassLabel::inconclusive(depth);  // not an action of the group
      }
    }
  }

  if (common_fixed_point(g, h0)) return ClassLabel::reducible();

  FixedSet gfix = pl_fixed_points(g);

  if (gfix.empty()) {
    // fixed-point-free g: check lamp commutation to the given depth
    std::vector<PLMap> h = pl_conjugates(g, h0, depth);
    bool commute = true;
    for (std::size_t i = 0; i < h.size() && commute; ++i)
      commute = h[i].compose(h0) == h0.compose(h[i]);
    if (commute) {
      if (h0.is_identity()) return ClassLabel::cyclic();
      auto ga = g.as_affine();
      auto ha = h0.as_affine();
      if (ga && ha && ga->slope == 1 && ha->slope == 1)
        return ClassLabel::translations(ha->offset, ga->offset);
      // detect h0 = g^k or g = h0^k within the depth
      for (long long k = -static_cast<long long>(depth); k <= static_cast<long long>(depth); ++k) {
        if (h0 == g.power(k)) return ClassLabel::translations(Rat(k), Rat(1));
        if (g == h0.power(k) && k != 0) return ClassLabel::translations(Rat(1), Rat(k));
      }
    }
    return ClassLabel::inconclusive(depth);
  }

  if (gfix.single_point()) {
    const Rat p = gfix.points.front();
    // sign(g(x) - x) is constant on each side of the unique fixed point
    Rat right_probe = (g.xs().back() > p ? g.xs().back() : p) + 1;
    Rat left_probe = (g.xs().front() < p ? g.xs().front() : p) - 1;
    bool expands_right = g.eval(right_probe) > right_probe;
    bool expands_left = g.eval(left_probe) < left_probe;
    bool contracts_right = g.eval(right_probe) < right_probe;
    bool contracts_left = g.eval(left_probe) > left_probe;
    bool expanding = expands_right && expands_left;
    bool contracting = contracts_right && contracts_left;
    if (expanding || contracting) {
      GuardedAction action(g, h0);
      // every conjugate must move p, all to the same side
      int side = 0;
      bool ok = true;
      for (long long n = -static_cast<long long>(depth);
           n <= static_cast<long long>(depth) && ok; ++n) {
        bool trusted = true;
        Rat v = action.conjugate_power(n, 1, p, trusted);
        int s = v > p ? 1 : (v < p ? -1 : 0);
        if (!trusted || s == 0) ok = false;
        else if (side == 0) side = s;
        else if (s != side) ok = false;
      }
      if (ok) {
        // nesting certificate for the components through the fixed point:
        // h_{n+1}^{-1}(p) < h_n^{+-k}(p) < h_{n+1}(p), evaluated stepwise;
        // every chain must stay inside the trusted span.
        const long long kcap = 6;
        bool nested = true;
        for (long long n = -static_cast<long long>(depth);
             n + 1 <= static_cast<long long>(depth) && nested; ++n) {
          bool trusted = true;
          Rat bound_hi = action.conjugate_power(n + 1, 1, p, trusted);
          Rat bound_lo = action.conjugate_power(n + 1, -1, p, trusted);
          for (long long k = 1; k <= kcap && nested && trusted; ++k) {
            Rat vp = action.conjugate_power(n, k, p, trusted);
            Rat vn = action.conjugate_power(n, -k, p, trusted);
            if (!trusted) break;
            if (!(bound_lo < vp && vp < bound_hi && bound_lo < vn && vn < bound_hi))
              nested = false;
          }
          if (!trusted) nested = false;
        }
        if (nested) {
          OrderTag tag;
          if (expanding)
            tag = side > 0 ? OrderTag::MaxPlus : OrderTag::MaxMinus;
          else
            tag = side > 0 ? OrderTag::MinPlus : OrderTag::MinMinus;
          return ClassLabel::plante_like(tag);
        }
      }
    }
  }
  return ClassLabel::inconclusive(depth);
}

DisjointnessReport disjointness_check(std::size_t N, std::size_t n, OrderTag tag) {
  if (N < 1 || n < 1) throw std::invalid_argument("disjointness_check: N and n must be >= 1");
  DisjointnessReport report;
  report.level = -static_cast<long long>(n) - 1;
  Leaf base(report.level, LaurentPoly());

  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > (std::size_t(1) << 40) / N)
      throw std::invalid_argument("disjointness_check: tuple set too large");
    total *= N;
  }
  report.leaves.reserve(total);
  std::vector<std::size_t> tuple(n, 1);
  while (true) {
    LaurentPoly lamp;
    for (std::size_t j = 0; j < n; ++j)
      lamp.add_term(-static_cast<long long>(j), Int(tuple[j]));
    report.leaves.push_back(act_leaf(WreathElement{lamp, 0}, base));
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (tuple[j] < N) {
        ++tuple[j];
        break;
      }
      tuple[j] = 1;
    }
    if (j == n) break;
  }

  report.all_disjoint = true;
  const std::size_t kFullPairLimit = 100000;
  std::size_t m = report.leaves.size();
  if (m * (m - 1) / 2 <= kFullPairLimit) {
    for (std::size_t i = 0; i < m && report.all_disjoint; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        ++report.pairs_checked;
        LeafRelation rel = relate(report.leaves[i], report.leaves[j], tag);
        if (rel != LeafRelation::DisjointLeft && rel != LeafRelation::DisjointRight) {
          report.all_disjoint = false;
          break;
        }
      }
  } else {
    // same-level leaves are disjoint iff their keys differ; verify key
    // distinctness and relate a deterministic pair sample
    report.exhaustive = false;
    std::set<Leaf> keys(report.leaves.begin(), report.leaves.end());
    if (keys.size() != m) report.all_disjoint = false;
    std::size_t stride = std::max<std::size_t>(1, m / 100);
    for (std::size_t i = 0; i < m && report.all_disjoint; i += stride)
      for (std::size_t j = i + stride; j < m; j += stride) {
        ++report.pairs_checked;
        LeafRelation rel = relate(report.leaves[i], report.leaves[j], tag);
        if (rel != LeafRelation::DisjointLeft && rel != LeafRelation::DisjointRight) {
          report.all_disjoint = false;
          break;
        }
      }
  }
  return report;
}

Rat c1_growth_predicate(const Rat& lambda, std::size_t N, const Rat& eps, std::size_t n) {
  if (lambda <= 0) throw std::invalid_argument("c1_growth_predicate: lambda must be positive");
  if (eps < 0 || eps >= 1) throw std::invalid_argument("c1_growth_predicate: need 0 <= eps < 1");
  Rat keep = 1 - eps;
  Rat factor = 1;
  for (std::size_t i = 0; i < 2 * N + 2; ++i) factor *= keep;
  factor *= Rat(Int(N));
  factor *= lambda;
  Rat out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= factor;
  return out;
}

}  // namespace solvline

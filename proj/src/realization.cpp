#include "solvline/realization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace solvline {

namespace {

// Shell s: coefficient vectors over degrees [-s, s] with entries in [-s, s],
// excluding vectors already present in shell s-1.
bool in_shell(const LaurentPoly& p, long long s) {
  if (p.is_zero()) return s == 0;
  if (p.top_degree() > s || p.low_degree() < -s) return false;
  for (const auto& [d, c] : p.terms())
    if (c > s || c < -s) return false;
  return true;
}

}  // namespace

std::size_t shell_cutoff(std::size_t s) {
  // |shells <= s| = (2s+1)^(2s+1)
  std::size_t total = 1;
  std::size_t width = 2 * s + 1;
  for (std::size_t i = 0; i < width; ++i) total *= width;
  return total;
}

LaurentPoly enumerate_config(std::size_t i) {
  long long s = 0;
  std::size_t base = 0;
  while (true) {
    std::size_t cutoff = shell_cutoff(static_cast<std::size_t>(s));
    if (i < cutoff) break;
    base = cutoff;
    ++s;
  }
  if (s == 0) return LaurentPoly();
  // Walk the lexicographic vectors of shell s, skipping interior ones.
  std::size_t remaining = i - base;
  std::size_t width = static_cast<std::size_t>(2 * s + 1);
  std::vector<long long> digits(width, 0);  // digit in [0, 2s], coeff = digit - s
  auto is_new = [&] {
    // new in shell s iff some |coeff| == s or some nonzero coeff at |degree| == s
    for (std::size_t j = 0; j < width; ++j) {
      long long c = digits[j] - s;
      if (c == s || c == -s) return true;
      long long deg = static_cast<long long>(j) - s;
      if ((deg == s || deg == -s) && c != 0) return true;
    }
    return false;
  };
  auto advance = [&] {
    for (std::size_t j = width; j-- > 0;) {
      if (digits[j] < 2 * s) {
        ++digits[j];
        return true;
      }
      digits[j] = 0;
    }
    return false;
  };
  while (true) {
    if (is_new()) {
      if (remaining == 0) break;
      --remaining;
    }
    if (!advance()) throw std::logic_error("enumerate_config: shell exhausted");
  }
  LaurentPoly p;
  for (std::size_t j = 0; j < width; ++j)
    p.add_term(static_cast<long long>(j) - s, Int(digits[j] - s));
  return p;
}

Rat cw_rational(std::size_t i) {
  if (i == 0) return 0;
  std::size_t j = (i - 1) / 2;  // index into the positive Calkin-Wilf stream
  Rat q = 1;
  for (std::size_t k = 0; k < j; ++k) {
    Int fl = numerator(q) / denominator(q);  // floor (q > 0)
    q = Rat(Int(1)) / (Rat(2 * fl) - q + 1);
  }
  return i % 2 == 1 ? q : -q;
}

Realization::Realization(OrderTag tag) : tag_(tag), enumeration_(&enumerate_config) {}

Realization Realization::build(std::size_t depth, OrderTag tag) {
  return build_with(depth, tag, &enumerate_config);
}

Realization Realization::build_with(std::size_t depth, OrderTag tag, Enumeration enumeration) {
  Realization r(tag);
  r.enumeration_ = std::move(enumeration);
  for (std::size_t round = 0; round < depth; ++round) {
    r.forward_round();
    r.backward_round();
  }
  return r;
}

std::size_t Realization::order_position(const LaurentPoly& p) const {
  std::size_t lo = 0, hi = entries_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (compare(entries_[mid].first, p, tag_) == Ordering::Less) lo = mid + 1;
    else hi = mid;
  }
  return lo;
}

void Realization::insert_at(std::size_t idx, const LaurentPoly& p, const Rat& q) {
  entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(idx), {p, q});
  by_config_.emplace(p, q);
  by_coord_.emplace(q, p);
}

Rat Realization::insert_config(const LaurentPoly& p) {
  std::size_t idx = order_position(p);
  Rat q;
  if (entries_.empty()) q = 0;
  else if (idx == 0) q = entries_.front().second - 1;
  else if (idx == entries_.size()) q = entries_.back().second + 1;
  else q = (entries_[idx - 1].second + entries_[idx].second) / 2;
  insert_at(idx, p, q);
  return q;
}

void Realization::forward_round() {
  while (by_config_.count(enumeration_(enum_cursor_)) > 0) ++enum_cursor_;
  insert_config(enumeration_(enum_cursor_));
  ++enum_cursor_;
}

LaurentPoly Realization::extremal_above() const {
  long long d = 0;
  if (is_max(tag_)) {
    for (const auto& [p, q] : entries_)
      if (!p.is_zero()) d = std::max(d, p.top_degree());
    return LaurentPoly::monomial(d + 1, is_plus(tag_) ? 1 : -1);
  }
  for (const auto& [p, q] : entries_)
    if (!p.is_zero()) d = std::min(d, p.low_degree());
  return LaurentPoly::monomial(d - 1, is_plus(tag_) ? 1 : -1);
}

LaurentPoly Realization::extremal_below() const { return extremal_above().negated(); }

void Realization::backward_round() {
  while (by_coord_.count(cw_rational(rat_cursor_)) > 0) ++rat_cursor_;
  Rat target = cw_rational(rat_cursor_);
  ++rat_cursor_;
  // position of target among realized coordinates
  std::size_t lo = 0, hi = entries_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (entries_[mid].second < target) lo = mid + 1;
    else hi = mid;
  }
  LaurentPoly pick;
  if (entries_.empty()) pick = LaurentPoly();
  else if (lo == 0) pick = extremal_below();
  else if (lo == entries_.size()) pick = extremal_above();
  else pick = between(entries_[lo - 1].first, entries_[lo].first, tag_);
  insert_at(lo, pick, target);
}

Rat Realization::coord(const LaurentPoly& p) {
  auto it = by_config_.find(p);
  if (it != by_config_.end()) return it->second;
  return insert_config(p);
}

std::optional<Rat> Realization::coord_if_assigned(const LaurentPoly& p) const {
  auto it = by_config_.find(p);
  if (it == by_config_.end()) return std::nullopt;
  return it->second;
}

bool Realization::is_realized(const Rat& q) const { return by_coord_.count(q) > 0; }

const LaurentPoly* Realization::config_at(const Rat& q) const {
  auto it = by_coord_.find(q);
  return it == by_coord_.end() ? nullptr : &it->second;
}

Rat Realization::act_point(const WreathElement& e, const Rat& q) {
  auto it = by_coord_.find(q);
  if (it == by_coord_.end()) {
    std::ostringstream os;
    os << "act_point: coordinate " << rat_str(q) << " is not realized";
    auto up = by_coord_.lower_bound(q);
    if (up != by_coord_.begin()) {
      auto down = std::prev(up);
      os << "; nearest realized below: " << rat_str(down->first);
    }
    if (up != by_coord_.end()) os << "; nearest realized above: " << rat_str(up->first);
    throw std::domain_error(os.str());
  }
  return coord(act_config(e, it->second));
}

std::vector<Rat> Realization::realized_in(const Rat& lo, const Rat& hi) const {
  std::vector<Rat> out;
  for (auto it = by_coord_.lower_bound(lo); it != by_coord_.end() && it->first <= hi; ++it)
    out.push_back(it->first);
  return out;
}

PLMap Realization::pl_window(const WreathElement& e, const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw std::invalid_argument("pl_window: empty window");
  if (!is_realized(lo) || !is_realized(hi))
    throw std::invalid_argument("pl_window: window endpoints must be realized");
  std::vector<Rat> qs = realized_in(lo, hi);  // snapshot before extension
  std::vector<std::pair<Rat, Rat>> nodes;
  nodes.reserve(qs.size());
  for (const Rat& q : qs) nodes.emplace_back(q, act_point(e, q));
  return PLMap::from_nodes(std::move(nodes), 1, 1);
}

std::string Realization::serialize() const {
  std::ostringstream os;
  for (const auto& [p, q] : entries_) os << p.str() << "|" << rat_str(q) << "\n";
  return os.str();
}

WreathElement minimality_probe(const LaurentPoly& q1, const LaurentPoly& q2,
                               const LaurentPoly& x, OrderTag tag) {
  if (compare(q1, q2, tag) != Ordering::Less)
    throw std::invalid_argument("minimality_probe: endpoints are not strictly ordered");
  auto strictly_inside = [&](const LaurentPoly& y) {
    return compare(q1, y, tag) == Ordering::Less && compare(y, q2, tag) == Ordering::Less;
  };
  if (strictly_inside(x)) return identity();

  LaurentPoly zero;
  LaurentPoly p = strictly_inside(zero) ? zero : between(q1, q2, tag);
  if (x.is_zero()) return WreathElement{p, 0};

  LaurentPoly a = q1 - p;  // strictly below zero
  LaurentPoly b = q2 - p;  // strictly above zero
  auto span = [](const LaurentPoly& y) {
    if (y.is_zero()) return 0LL;
    return std::max(std::llabs(y.top_degree()), std::llabs(y.low_degree()));
  };
  long long bound = span(a) + span(b) + span(x) + 8;
  // Smallest rescaling scale first: n = 0, 1, -1, 2, -2, ...
  for (long long step = 0; step <= 2 * bound; ++step) {
    long long n = step % 2 == 1 ? (step + 1) / 2 : -step / 2;
    LaurentPoly image = x.shifted(-n);
    if (compare(a, image, tag) == Ordering::Less && compare(image, b, tag) == Ordering::Less)
      return WreathElement{p, -n};  // w = h^{-1} g^{-n} with h translation by -p
  }
  throw std::logic_error("minimality_probe: no rescaling found within the degree bound");
}

}  // namespace solvline

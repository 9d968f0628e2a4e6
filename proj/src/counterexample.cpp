#include "solvline/counterexample.hpp"

#include <sstream>
#include <stdexcept>

namespace solvline {

BConfig BConfig::delta(const BElement& b, long long value) {
  BConfig f;
  f.add(b, value);
  return f;
}

long long BConfig::value_at(const BElement& b) const {
  auto it = entries_.find(b);
  return it == entries_.end() ? 0 : it->second;
}

void BConfig::add(const BElement& b, long long value) {
  if (value == 0) return;
  auto [it, inserted] = entries_.emplace(b, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

BConfig operator+(const BConfig& a, const BConfig& b) {
  BConfig out = a;
  for (const auto& [k, v] : b.entries_) out.add(k, v);
  return out;
}

BConfig BConfig::negated() const {
  BConfig out;
  for (const auto& [k, v] : entries_) out.entries_.emplace(k, -v);
  return out;
}

BConfig BConfig::keys_right_multiplied(const BElement& r) const {
  BConfig out;
  for (const auto& [k, v] : entries_) out.add(k.compose(r), v);
  return out;
}

BConfig BConfig::keys_left_multiplied(const BElement& b) const {
  BConfig out;
  for (const auto& [k, v] : entries_) out.add(b.compose(k), v);
  return out;
}

BConfig BConfig::restricted_above(const BElement& b) const {
  BConfig out;
  for (const auto& [k, v] : entries_)
    if (compare_B(k, b) == Ordering::Greater) out.add(k, v);
  return out;
}

std::string BConfig::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) os << " ";
    os << v << "*d[" << k.str() << "]";
    first = false;
  }
  return os.str();
}

std::string GBElement::str() const {
  return "(" + config.str() + "; " + base.str() + ")";
}

GBElement gb_identity() { return GBElement{}; }

GBElement mul_gb(const GBElement& a, const GBElement& b) {
  return GBElement{a.config + b.config.keys_left_multiplied(a.base), a.base.compose(b.base)};
}

GBElement inv_gb(const GBElement& a) {
  BElement binv = a.base.inverse();
  return GBElement{a.config.negated().keys_left_multiplied(binv), binv};
}

BConfig act_bconfig(const GBElement& e, const BConfig& f) {
  return e.config + f.keys_left_multiplied(e.base);
}

Ordering compare_bconfig(const BConfig& f1, const BConfig& f2) {
  bool found = false;
  BElement best;
  long long d1 = 0, d2 = 0;
  auto consider = [&](const BElement& k) {
    long long v1 = f1.value_at(k);
    long long v2 = f2.value_at(k);
    if (v1 == v2) return;
    if (!found || compare_B(k, best) == Ordering::Greater) {
      best = k;
      d1 = v1;
      d2 = v2;
      found = true;
    }
  };
  for (const auto& [k, v] : f1.entries()) consider(k);
  for (const auto& [k, v] : f2.entries()) consider(k);
  if (!found) return Ordering::Equal;
  return d1 < d2 ? Ordering::Less : Ordering::Greater;
}

GBElement tau_n(const GBElement& e, long long n) {
  BElement tpow = BElement::translation().power(-n);
  return GBElement{e.config.keys_right_multiplied(tpow), e.base};
}

BElement maxsupp_after_twist(const BConfig& f, long long n) {
  if (f.is_zero()) throw std::invalid_argument("maxsupp_after_twist: zero configuration");
  BElement tpow = BElement::translation().power(-n);
  bool found = false;
  BElement best;
  for (const auto& [k, v] : f.entries()) {
    BElement moved = k.compose(tpow);
    if (!found || compare_B(moved, best) == Ordering::Greater) {
      best = moved;
      found = true;
    }
  }
  return best;
}

BCut BCut::cut(const BConfig& config, const BElement& base) {
  BCut c;
  c.base = base;
  c.tail = config.restricted_above(base);
  return c;
}

std::string BCut::str() const { return "Cut(" + tail.str() + " | " + base.str() + ")"; }

Ordering compare_bcut(const BCut& c1, const BCut& c2) {
  Ordering bases = compare_B(c1.base, c2.base);
  if (bases == Ordering::Greater) return flip(compare_bcut(c2, c1));
  // now base1 <= base2 in the left order
  BConfig r1 = c1.tail.restricted_above(c2.base);
  Ordering tails = compare_bconfig(r1, c2.tail);
  if (tails != Ordering::Equal) return tails;
  if (bases == Ordering::Equal) return c1.tail == c2.tail ? Ordering::Equal : tails;
  return Ordering::Less;  // the cut at the lower base is dominated
}

BCut act_bcut(const GBElement& e, const BCut& c) {
  BElement new_base = e.base.compose(c.base);
  BConfig moved = e.config + c.tail.keys_left_multiplied(e.base);
  return BCut::cut(moved, new_base);
}

Ordering base_orbit_compare(const GBElement& g1, const GBElement& g2, long long n) {
  BCut origin = BCut::cut(BConfig(), BElement::identity());
  BCut cut1 = act_bcut(tau_n(g1, n), origin);
  BCut cut2 = act_bcut(tau_n(g2, n), origin);
  return compare_bcut(cut1, cut2);
}

StabilizationResult stabilization_N(const GBElement& g1, const GBElement& g2, std::size_t cap) {
  if (g1.base == g2.base)
    throw std::invalid_argument("stabilization_N: the two elements must have distinct bases");
  StabilizationResult result;
  result.order = compare_B(g1.base, g2.base);

  std::vector<bool> agrees(cap + 1, false);
  std::vector<bool> analytic(cap + 1, false);
  for (std::size_t n = 0; n <= cap; ++n) {
    agrees[n] = base_orbit_compare(g1, g2, static_cast<long long>(n)) == result.order;
    bool cert = true;
    if (!g1.config.is_zero())
      cert = compare_B(maxsupp_after_twist(g1.config, static_cast<long long>(n)), g1.base) ==
             Ordering::Less;
    if (cert && !g2.config.is_zero())
      cert = compare_B(maxsupp_after_twist(g2.config, static_cast<long long>(n)), g2.base) ==
             Ordering::Less;
    analytic[n] = cert;
  }
  // least n from which the symbolic ordering matches through the cap
  std::size_t first_agree = cap + 1;
  for (std::size_t n = cap + 1; n-- > 0;) {
    if (!agrees[n]) break;
    first_agree = n;
  }
  // least n with the analytic certificate (monotone in n)
  std::size_t first_analytic = cap + 1;
  for (std::size_t n = 0; n <= cap; ++n)
    if (analytic[n]) {
      first_analytic = n;
      break;
    }
  if (first_agree > cap || first_analytic > cap) return result;  // not stabilized
  result.stabilized = true;
  result.first_agree = first_agree;
  result.N = std::max(first_agree, first_analytic);
  return result;
}

}  // namespace solvline

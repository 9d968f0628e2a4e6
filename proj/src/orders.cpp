#include "solvline/orders.hpp"

#include <sstream>
#include <stdexcept>

namespace solvline {

std::string to_string(OrderTag t) {
  switch (t) {
    case OrderTag::MaxPlus: return "max+";
    case OrderTag::MaxMinus: return "max-";
    case OrderTag::MinPlus: return "min+";
    case OrderTag::MinMinus: return "min-";
  }
  return "?";
}

OrderTag parse_order_tag(const std::string& s) {
  if (s == "max+") return OrderTag::MaxPlus;
  if (s == "max-") return OrderTag::MaxMinus;
  if (s == "min+") return OrderTag::MinPlus;
  if (s == "min-") return OrderTag::MinMinus;
  throw std::invalid_argument("unknown order tag '" + s + "' (expected max+|max-|min+|min-)");
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return Ordering::Equal;
}

Sign sign(const LaurentPoly& p, OrderTag tag) {
  if (p.is_zero()) return Sign::Zero;
  const Int& c = is_max(tag) ? p.terms().rbegin()->second : p.terms().begin()->second;
  bool positive = is_plus(tag) ? c > 0 : c < 0;
  return positive ? Sign::Pos : Sign::Neg;
}

Ordering compare(const LaurentPoly& p, const LaurentPoly& q, OrderTag tag) {
  switch (sign(q - p, tag)) {
    case Sign::Zero: return Ordering::Equal;
    case Sign::Pos: return Ordering::Less;
    case Sign::Neg: return Ordering::Greater;
  }
  return Ordering::Equal;
}

LaurentPoly between(const LaurentPoly& q1, const LaurentPoly& q2, OrderTag tag) {
  if (compare(q1, q2, tag) != Ordering::Less)
    throw std::invalid_argument("between: arguments are not strictly ordered");
  LaurentPoly diff = q2 - q1;
  long long extremal = is_max(tag) ? diff.top_degree() : diff.low_degree();
  long long step = is_max(tag) ? extremal - 1 : extremal + 1;
  Int unit = is_plus(tag) ? 1 : -1;
  return q2 - LaurentPoly::monomial(step, unit);
}

namespace {
Rat pow2(long long m) {
  Rat r = 1;
  Int two = 2;
  if (m >= 0) {
    Int num = 1;
    num <<= static_cast<unsigned>(m);
    return Rat(num);
  }
  Int den = 1;
  den <<= static_cast<unsigned>(-m);
  return Rat(Int(1), den);
}
}  // namespace

BElement::BElement(long long log2slope, Rat offset) : m_(log2slope), offset_(std::move(offset)) {
  Int den = denominator(offset_);
  while (den > 1) {
    if (den % 2 != 0) throw std::invalid_argument("BElement offset must be dyadic");
    den /= 2;
  }
}

Int BElement::offset_num() const { return numerator(offset_); }

unsigned BElement::offset_den_pow2() const {
  Int den = denominator(offset_);
  unsigned pow = 0;
  while (den > 1) {
    den /= 2;
    ++pow;
  }
  return pow;
}

Rat BElement::apply(const Rat& x) const { return pow2(m_) * x + offset_; }

BElement BElement::compose(const BElement& rhs) const {
  return BElement(m_ + rhs.m_, pow2(m_) * rhs.offset_ + offset_);
}

BElement BElement::inverse() const { return BElement(-m_, -pow2(-m_) * offset_); }

BElement BElement::power(long long n) const {
  BElement acc;
  BElement base = n >= 0 ? *this : inverse();
  long long k = n >= 0 ? n : -n;
  for (long long i = 0; i < k; ++i) acc = acc.compose(base);
  return acc;
}

std::string BElement::str() const {
  std::ostringstream os;
  os << "x->";
  if (m_ != 0) os << "2^" << m_ << "*";
  os << "x";
  if (offset_ > 0) os << "+" << offset_;
  if (offset_ < 0) os << offset_;
  return os.str();
}

int QuadVal::sgn() const {
  if (a == 0) return b == 0 ? 0 : (b > 0 ? 1 : -1);
  if (b == 0) return a > 0 ? 1 : -1;
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  // mixed signs: compare 2a^2 against b^2
  Rat lhs = 2 * a * a, rhs = b * b;
  if (a > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return lhs < rhs ? 1 : (lhs > rhs ? -1 : 0);
}

bool QuadVal::operator<(const QuadVal& other) const {
  return QuadVal{a - other.a, b - other.b}.sgn() < 0;
}

std::string QuadVal::str() const {
  std::ostringstream os;
  os << rat_str(a) << "*sqrt2" << (b >= 0 ? "+" : "") << rat_str(b);
  return os.str();
}

QuadVal xi0_image(const BElement& b) {
  // 2^m (sqrt2 - 1) + d
  Rat scale = pow2(b.log2slope());
  return QuadVal{scale, b.offset() - scale};
}

Ordering compare_B(const BElement& b1, const BElement& b2) {
  int s = QuadVal{xi0_image(b1).a - xi0_image(b2).a, xi0_image(b1).b - xi0_image(b2).b}.sgn();
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace solvline

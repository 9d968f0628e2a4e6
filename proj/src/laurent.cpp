#include "solvline/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace solvline {

LaurentPoly LaurentPoly::monomial(long long degree, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(degree, std::move(coeff));
  return p;
}

Int LaurentPoly::coeff(long long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Int(0) : it->second;
}

long long LaurentPoly::top_degree() const {
  if (terms_.empty()) throw std::logic_error("top_degree of zero polynomial");
  return terms_.rbegin()->first;
}

long long LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::logic_error("low_degree of zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly LaurentPoly::part_above(long long n) const {
  LaurentPoly out;
  for (auto it = terms_.upper_bound(n); it != terms_.end(); ++it) out.terms_.insert(*it);
  return out;
}

LaurentPoly LaurentPoly::shifted(long long k) const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + k, c);
  return out;
}

LaurentPoly LaurentPoly::negated() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(-d, c);
  return out;
}

void LaurentPoly::add_term(long long degree, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [d, c] : b.terms_) out.add_term(d, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [d, c] : b.terms_) out.add_term(d, -c);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Int abs = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (d == 0) {
      os << abs;
    } else {
      if (abs != 1) os << abs;
      os << 'X';
      if (d != 1) os << '^' << d;
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty polynomial string");
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(i));
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    bool has_x = i < text.size() && (text[i] == 'X' || text[i] == 'x');
    if (!has_x && digits.empty())
      throw std::invalid_argument("expected term at offset " + std::to_string(i));
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    long long degree = 0;
    if (has_x) {
      ++i;
      degree = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        std::string exp;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp += text[i++];
        if (exp.empty()) throw std::invalid_argument("expected exponent at offset " + std::to_string(i));
        degree = std::stoll(exp);
        if (neg) degree = -degree;
      }
    }
    out.add_term(degree, sign < 0 ? Int(-coeff) : coeff);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty polynomial string");
  return out;
}

LaurentPoly x_power(long long degree) { return LaurentPoly::monomial(degree, 1); }

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  if (denominator(r) == 1) os << numerator(r);
  else os << numerator(r) << "/" << denominator(r);
  return os.str();
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
}

}  // namespace solvline

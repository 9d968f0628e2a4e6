#include "solvline/wreath.hpp"

#include <sstream>
#include <stdexcept>

namespace solvline {

std::string WreathElement::str() const {
  std::ostringstream os;
  os << "(" << lamp.str() << ", " << shift << ")";
  return os.str();
}

WreathElement identity() { return WreathElement{}; }
WreathElement gen_g() { return WreathElement{LaurentPoly(), 1}; }
WreathElement gen_h0() { return WreathElement{LaurentPoly::constant(1), 0}; }
WreathElement lamp_at(long long n) { return WreathElement{x_power(n), 0}; }
WreathElement shift_by(long long k) { return WreathElement{LaurentPoly(), k}; }

WreathElement mul(const WreathElement& a, const WreathElement& b) {
  return WreathElement{a.lamp + b.lamp.shifted(a.shift), a.shift + b.shift};
}

WreathElement inv(const WreathElement& a) {
  return WreathElement{a.lamp.negated().shifted(-a.shift), -a.shift};
}

WreathElement conj(const WreathElement& a, const WreathElement& b) {
  return mul(mul(a, b), inv(a));
}

WreathElement power(const WreathElement& a, long long n) {
  WreathElement acc = identity();
  WreathElement base = n >= 0 ? a : inv(a);
  long long k = n >= 0 ? n : -n;
  for (long long i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

LaurentPoly act_config(const WreathElement& e, const LaurentPoly& p) {
  return e.lamp + p.shifted(e.shift);
}

bool is_in_fitting(const WreathElement& e) { return e.shift == 0; }

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "g") w.push_back(WordToken::G);
    else if (tok == "G") w.push_back(WordToken::GInv);
    else if (tok == "h") w.push_back(WordToken::H);
    else if (tok == "H") w.push_back(WordToken::HInv);
    else throw std::invalid_argument("unknown word token '" + tok + "' (expected g, G, h, H)");
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string out;
  for (WordToken t : w) {
    if (!out.empty()) out += ' ';
    switch (t) {
      case WordToken::G: out += 'g'; break;
      case WordToken::GInv: out += 'G'; break;
      case WordToken::H: out += 'h'; break;
      case WordToken::HInv: out += 'H'; break;
    }
  }
  return out;
}

WreathElement eval_word(const Word& w) {
  WreathElement acc = identity();
  for (WordToken t : w) {
    switch (t) {
      case WordToken::G: acc = mul(acc, gen_g()); break;
      case WordToken::GInv: acc = mul(acc, inv(gen_g())); break;
      case WordToken::H: acc = mul(acc, gen_h0()); break;
      case WordToken::HInv: acc = mul(acc, inv(gen_h0())); break;
    }
  }
  return acc;
}

}  // namespace solvline

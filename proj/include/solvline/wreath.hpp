#pragma once

#include <string>
#include <vector>

#include "solvline/laurent.hpp"

namespace solvline {

/// Element of the lamplighter-type group in normal form (lamp, shift):
/// multiplication (f1,k1)(f2,k2) = (f1 + X^{k1} f2, k1+k2). All values are
/// immutable after construction; every operation here is a pure function.
struct WreathElement {
  LaurentPoly lamp;
  long long shift = 0;

  bool is_identity() const { return shift == 0 && lamp.is_zero(); }
  bool operator==(const WreathElement& other) const {
    return shift == other.shift && lamp == other.lamp;
  }
  bool operator!=(const WreathElement& other) const { return !(*this == other); }
  std::string str() const;
};

WreathElement identity();
/// The shift generator (0, 1).
WreathElement gen_g();
/// The lamp generator (1, 0).
WreathElement gen_h0();
/// h_n = (X^n, 0).
WreathElement lamp_at(long long n);
/// (0, k).
WreathElement shift_by(long long k);

WreathElement mul(const WreathElement& a, const WreathElement& b);
WreathElement inv(const WreathElement& a);
/// a b a^{-1}
WreathElement conj(const WreathElement& a, const WreathElement& b);
WreathElement power(const WreathElement& a, long long n);

/// The natural affine action on configurations: (f,k).P = f + X^k P.
LaurentPoly act_config(const WreathElement& e, const LaurentPoly& p);

/// Membership in the subgroup of shift 0 (the Fitting subgroup).
bool is_in_fitting(const WreathElement& e);

enum class WordToken { G, GInv, H, HInv };

/// Generator word over tokens g, G (inverse), h, H.
using Word = std::vector<WordToken>;

/// Parses a space-separated token string, e.g. "g h G".
Word parse_word(const std::string& text);
std::string word_str(const Word& w);

/// Left-to-right product of generator images, in normal form.
WreathElement eval_word(const Word& w);

}  // namespace solvline

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace alphadet {

// Canonical big rational (denominator > 0, reduced).
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "p/q" or a terminating decimal such as "-0.5". Throws Input.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// num/den in canonical form; den must be nonzero.
inline Rational ratio(long num, long den) {
  Rational r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace alphadet

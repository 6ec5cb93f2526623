#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crepant {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// mpq_class(p, q) does not canonicalize; always build fractions through this.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace crepant

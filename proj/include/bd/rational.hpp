#pragma once

#include <string>

#include <gmpxx.h>

namespace bd {

// All scalar arithmetic in the project is exact. Rational is GMP's canonical
// fraction type (lowest terms, positive denominator); Integer is unbounded.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or just "p" when the denominator is 1. Sign on the numerator.
std::string format_rational(const Rational& value);

// Inverse of format_rational. Accepts an optional leading '-' and a single
// '/' separator; throws Errc::parse on anything else (including q <= 0 after
// canonicalization is impossible, but "p/0" is rejected here).
Rational parse_rational(const std::string& text);

inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

inline int rational_sign(const Rational& value) { return sgn(value); }

}  // namespace bd

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mzv {

using Rational = mpq_class;

/// Parses "p", "p/q", "-0.75", "1e-3" or "2.5e2" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational pow(const Rational& base, long exponent);

/// Exact 2^e for any integer e.
Rational pow2(long exponent);

Rational factorial(unsigned long n);

Rational binomial(unsigned long n, unsigned long k);

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational scaled(const Rational& x, const Rational& q) { return Rational(x * q); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
double magnitude(const Rational& x);

}  // namespace mzv

#pragma once

#include <gmpxx.h>

#include <string>

namespace casimir {

/// Arbitrary-precision rationals over Q, kept canonical by GMP
/// (gcd(|num|, den) = 1, den > 0, zero stored as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// Throws ParseError on anything else, including q = 0.
Rational rational_from_string(const std::string& text);

/// Canonical form: "p", or "p/q" with q > 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// value^exponent with exponent >= 0.
Rational pow_rational(const Rational& value, unsigned long exponent);

}  // namespace casimir

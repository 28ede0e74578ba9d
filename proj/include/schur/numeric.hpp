#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schur {

// All counting and probability arithmetic is exact. BigInt/Rational wrap
// GMP; Rational values are always kept in lowest terms by gmpxx.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);

// binomial(n, k) with the convention C(n, -1) = 0 (used throughout the
// outcome-probability formulas).
BigInt binomial(unsigned n, long k);

// Renders q as a decimal string with `sig_digits` significant digits,
// trailing zeros trimmed. Values with decimal exponent in [-4, sig_digits)
// use fixed notation, others scientific.
std::string decimal_string(const Rational& q, int sig_digits = 12);

// Parses a decimal string ("0.25", "3", "1/4", "2.5e-3") into an exact
// rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

inline std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace schur

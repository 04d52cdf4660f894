#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hrep {

/// Exact rational scalar. GMP keeps every value canonical (gcd 1, positive
/// denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline int sign_of(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace hrep

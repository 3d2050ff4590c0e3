#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hermsig {

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive
/// denominator) by GMP.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws Error("ParseError") on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; the denominator is always written, "3/1" included.
std::string to_string(const Rational& value);

/// Human-oriented form: "3" for integers, "3/4" otherwise.
std::string to_display_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace hermsig

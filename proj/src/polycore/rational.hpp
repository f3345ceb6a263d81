#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bbs {

// Exact coefficients: arbitrary-precision rationals, always canonicalized.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" (q != 0). Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace bbs

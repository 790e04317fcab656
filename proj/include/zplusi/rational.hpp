// Arbitrary-precision rationals. GMP's mpq_class already maintains the
// canonical form we require (positive denominator, reduced, 0 = 0/1), so the
// toolkit uses it directly and adds the text form and a few predicates.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zplusi {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p" or "p/q" (optional leading '-'); result canonical.
// Throws ParseError on malformed text, ZeroDenominator on q = 0.
Rational rat_from_string(std::string_view text);

// Canonical text: "p" when q = 1, else "p/q" with q > 0 and gcd(p,q) = 1.
std::string rat_to_string(const Rational& r);

bool rat_is_integer(const Rational& r);

// The integer value of an integral rational; throws std::invalid_argument if
// not integral, std::overflow_error if it does not fit in long.
long rat_to_long(const Rational& r);

}  // namespace zplusi

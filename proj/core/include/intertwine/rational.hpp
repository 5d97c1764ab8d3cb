#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace intertwine {

// Never bind gmpxx arithmetic to `auto`: the expression templates keep
// references to temporaries. Spell out Rational.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (mpq_class(num, den) does not canonicalize). Throws DomainError on den = 0.
Rational make_rational(long num, long den);

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). Throws DomainError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Fractional part in [0, 1).
Rational fractional_part(const Rational& value);

Rational floor(const Rational& value);

}  // namespace intertwine

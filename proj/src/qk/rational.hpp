#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qk {

// Exact arbitrary-precision rationals. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as they are built through
// the helpers below; raw mpq_class(num, den) does not canonicalize.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer &num, const Integer &den);
Rational make_rational(long num, long den = 1);

// Parses "p/q" or "n"; whitespace is not accepted.
Rational rational_from_string(const std::string &text);

// Formats as "p/q", or "n" when the denominator is 1.
std::string rational_to_string(const Rational &value);

bool is_integer(const Rational &value);

// Largest integer <= value.
Integer rational_floor(const Rational &value);

// value - floor(value), always in [0,1).
Rational fractional_part(const Rational &value);

// Requires an integral value that fits in long.
long to_long(const Rational &value);

using RationalVector = std::vector<Rational>;

// Exact dot product; both vectors must have equal length.
Rational dot(const RationalVector &a, const RationalVector &b);

bool is_zero_vector(const RationalVector &v);

// Lexicographic comparison, entrywise exact.
int compare_lex(const RationalVector &a, const RationalVector &b);

}  // namespace qk

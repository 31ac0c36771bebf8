#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilspec {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps every value canonical: the denominator is
/// positive, gcd(|num|, den) = 1 and zero is stored as 0/1.
using Rat = mpq_class;

/// Parses `p` or `p/q` (optional sign, decimal digits). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Parses a decimal integer. Throws std::invalid_argument on malformed text.
Integer parse_integer(std::string_view text);

/// Renders `p` when the denominator is 1, `p/q` otherwise.
std::string to_string(const Rat& value);
std::string to_string(const Integer& value);

int sign(const Rat& value);
int sign(const Integer& value);

}  // namespace nilspec

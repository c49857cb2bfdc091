#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace eulnar {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator) as long as constructors go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading '-'). Returns nullopt on malformed
/// input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

Rational factorial(unsigned n);

/// q^k for a non-negative integer exponent.
Rational power(const Rational& q, unsigned k);

/// Integer value of q, or nullopt when q is not an integer.
std::optional<long> as_long(const Rational& q);

}  // namespace eulnar

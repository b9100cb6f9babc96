#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace helixlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class's two-argument constructor does not
/// canonicalize, and comparisons assume canonical form.
Rational ratio(const Integer& num, const Integer& den);

/// Parses "p/q", "p", "-p/q". Throws Error(ParseError) on a zero
/// denominator or any stray character. The result is canonicalized.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
Integer abs_value(const Integer& z);

std::size_t hash_integer(const Integer& z) noexcept;

}  // namespace helixlab

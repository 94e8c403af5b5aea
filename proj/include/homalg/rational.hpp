#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homalg {

/// Exact rational scalar; always kept in canonical reduced form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading sign). Throws ParseError on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_zero(std::span<const Rational> v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace homalg

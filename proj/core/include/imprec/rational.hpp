#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace imprec {

// Exact arbitrary-precision fraction, always in lowest terms with a
// positive denominator (maintained by the GMP backend). All arithmetic in
// this library is exact; equality is decidable everywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVector = std::vector<Rational>;

/// "p/q", with "/1" omitted for integers.
std::string to_string(const Rational& r);

/// Parses "p/q" or "p". Throws DomainError on malformed input or zero
/// denominator.
Rational rational_from_string(std::string_view s);

/// Exact decimal rendering with the given number of fraction digits,
/// rounding half away from zero. Used only at presentation boundaries
/// (SVG); comparisons never go through this.
std::string format_fixed(const Rational& r, int digits);

bool lex_less(const RatVector& a, const RatVector& b);

RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_scale(const Rational& c, const RatVector& v);

}  // namespace imprec

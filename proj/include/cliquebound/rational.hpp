#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace cliquebound {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Decimal rendering with `digits` significant digits, display only.
std::string to_decimal(const Rational &q, int digits = 10);

/// Parses "p", "p/q" or a finite decimal such as "0.25". Throws
/// std::invalid_argument on anything else.
Rational parse_rational(const std::string &text);

inline Integer to_integer(std::size_t v) { return Integer(static_cast<unsigned long>(v)); }

/// num / den in lowest terms. Every two-argument construction goes through
/// here: GMP arithmetic and comparisons assume canonical operands.
inline Rational ratio(const Integer &num, const Integer &den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k);

/// C(c, t) / c^t, the per-vertex weight of the localized bound. Zero when c < t.
Rational clique_density_weight(unsigned long c, unsigned long t);

} // namespace cliquebound

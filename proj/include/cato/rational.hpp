#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace cato {

/// Exact rational scalar used everywhere; no floating point in this library.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Valuation of zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// The integer value of `q`; throws std::domain_error if `q` is not integral
/// or does not fit.
std::int64_t to_int64(const Rational& q);

/// p-adic valuation of a non-zero integer; kInfiniteValuation for zero.
int valuation(const mpz_class& n, unsigned long p);

/// p-adic valuation v_p(q) = v_p(num) - v_p(den).
int valuation(const Rational& q, unsigned long p);

/// True when v_p(q) >= 0 (q lies in the localization Z_(p)).
bool is_p_integral(const Rational& q, unsigned long p);

/// p^e as a rational, e may be negative.
Rational prime_power(unsigned long p, int e);

Rational factorial(unsigned n);

bool is_prime(unsigned long n);

}  // namespace cato

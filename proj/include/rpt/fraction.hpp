#pragma once

// Exact rational and big-integer arithmetic shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rpt {

using BigInt = boost::multiprecision::mpz_int;
using Fraction = boost::multiprecision::mpq_rational;

/// Parses "p/q", an integer, or a decimal such as "0.05" or "1e-3" exactly.
/// Decimals are expanded in base 10, never through binary floating point.
Fraction parse_fraction(std::string_view text);

/// Canonical "p/q" rendering (always with a denominator, e.g. "1/1").
std::string to_string(const Fraction & f);
std::string to_string(const BigInt & z);

BigInt floor_of(const Fraction & f);
BigInt ceil_of(const Fraction & f);

/// ceil(f * k) for integer k, as a plain integer; throws if it does not fit.
std::int64_t ceil_times(const Fraction & f, std::int64_t k);
std::int64_t floor_times(const Fraction & f, std::int64_t k);

Fraction pow(const Fraction & base, unsigned exponent);
BigInt binomial(std::int64_t n, std::int64_t k);

/// Plain double approximation (for human-readable output only).
double to_double(const Fraction & f);

inline bool in_open_unit(const Fraction & f) { return f > 0 && f < 1; }

} // namespace rpt

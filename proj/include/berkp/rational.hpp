#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace berkp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b", "a" or "-a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// a/b in lowest terms; mpq_class(a, b) alone does not reduce.
Rational frac(long a, long b);
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
std::int64_t to_int64(const Integer& n);

/// p-adic valuation of a nonzero integer.
std::int64_t valuation(const Integer& n, std::int64_t p);
/// p-adic valuation of a nonzero rational.
std::int64_t valuation(const Rational& q, std::int64_t p);

Integer ipow(std::int64_t base, std::uint64_t exponent);
/// p^e as an exact rational, e of either sign.
Rational rpow(std::int64_t p, std::int64_t exponent);

/// Least nonnegative residue of n modulo m (m > 0).
Integer mod(const Integer& n, const Integer& m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
Integer inverse_mod(const Integer& a, const Integer& m);

bool is_prime(std::int64_t n);

}  // namespace berkp

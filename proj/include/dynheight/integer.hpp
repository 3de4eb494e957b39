#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dynheight {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses a base-10 integer (optional sign). Throws InvalidInput on junk.
Integer parse_integer(std::string_view text);

/// Parses "a" or "a/b" into a canonicalized rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// ord_p(n) for n != 0. Throws on n == 0.
long valuation(const Integer& n, const Integer& p);

/// ord_p(q) for q != 0 (numerator minus denominator valuation).
long valuation(const Rational& q, const Integer& p);

/// n with every factor of p removed.
Integer strip_prime(const Integer& n, const Integer& p);

bool is_prime(const Integer& n);

/// Sorted distinct prime divisors of |n|; n must be nonzero.
/// Trial division by small primes, then Brent's variant of Pollard rho.
std::vector<Integer> prime_divisors(const Integer& n);

/// gcd of all entries (nonnegative); zero for an all-zero span.
Integer content(std::span<const Integer> values);

Integer lcm_of_denominators(std::span<const Rational> values);

/// Number of bits needed for |n| (0 for n == 0).
std::size_t bit_length(const Integer& n);

}  // namespace dynheight

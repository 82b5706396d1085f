#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bagraph {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form (gcd removed, positive denominator).
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// n! from a process-wide memo table (thread-safe).
Integer factorial(std::uint32_t n);

/// C(n, r); zero when r > n.
Integer binomial(std::uint64_t n, std::uint64_t r);

/// n (n-1) ... (n-r+1); zero when r > n.
Integer falling_factorial(std::uint64_t n, std::uint64_t r);

Integer power(std::uint64_t base, std::uint64_t exponent);

/// Always "num/den", including integers ("1/1").
std::string to_fraction_string(const Rational& q);

/// Natural log of a positive rational, accurate for arbitrarily large parts.
double log_of(const Rational& q);

}  // namespace bagraph

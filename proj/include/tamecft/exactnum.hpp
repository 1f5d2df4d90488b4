#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace tamecft {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// base^exponent; a negative exponent needs base != 0.
Rational rational_pow(const Rational& base, long exponent);

bool is_prime(std::int64_t n);

/// Distinct prime divisors of n (n >= 1), ascending, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a modulo n (n > 0).
std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t mod(const Integer& a, std::int64_t n);

/// Exact p-adic valuation of a nonzero rational.
int valuation_p(const Rational& r, std::int64_t p);

/// Image of a p-integral rational in Z/modulus, where modulus is a power of p.
Integer reduce_mod(const Rational& r, const Integer& modulus);

/// Finite-precision window onto Z_p: arithmetic happens modulo p^precision.
struct PAdicContext {
    static constexpr int default_precision = 12;

    std::int64_t p;
    int precision;

    PAdicContext(std::int64_t prime, int precision = default_precision);

    Integer modulus() const;
};

/// A residue modulo p^precision. The precision travels with the value.
struct TruncatedPAdic {
    Integer value;
    std::int64_t p;
    int precision;

    /// Same p-adic integer at a lower precision.
    TruncatedPAdic truncate(int lower_precision) const;

    bool operator==(const TruncatedPAdic&) const = default;
};

/// Teichmuller representative of a p-adic unit: the root of unity of order
/// prime to p congruent to a mod p. Computed as the fixed point of x -> x^p.
TruncatedPAdic teichmuller(const Rational& a, const PAdicContext& ctx);

/// The unique v = 1 mod p with v^m = u mod p^N, for u = 1 mod p and m prime
/// to p. Hensel/Newton lifting starting from 1.
TruncatedPAdic unit_mth_root(const Rational& u, std::int64_t m, const PAdicContext& ctx);

}  // namespace tamecft

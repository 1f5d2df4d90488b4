#include "tamecft/exactnum.hpp"

#include <numeric>

#include "tamecft/error.hpp"

namespace tamecft {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw Error(ErrorKind::ZeroInput, "zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, long exponent)
{
    if (exponent < 0 && base == 0) {
        throw Error(ErrorKind::ZeroInput, "negative power of zero");
    }
    Rational result = 1;
    Rational b = exponent < 0 ? Rational(1 / base) : base;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    while (e > 0) {
        if (e & 1UL) {
            result *= b;
        }
        e >>= 1UL;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    if (n < 4) {
        return true;
    }
    if (n % 2 == 0) {
        return false;
    }
    for (std::int64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t mod(const Integer& a, std::int64_t n)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(n));
    return r.get_si();
}

namespace {

void require_prime(std::int64_t p)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
}

int integer_valuation(Integer n, std::int64_t p)
{
    int v = 0;
    const Integer pp = static_cast<long>(p);
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
        n /= pp;
        ++v;
    }
    return v;
}

}  // namespace

int valuation_p(const Rational& r, std::int64_t p)
{
    if (r == 0) {
        throw Error(ErrorKind::ZeroInput, "valuation of zero");
    }
    require_prime(p);
    return integer_valuation(r.get_num(), p) - integer_valuation(r.get_den(), p);
}

Integer reduce_mod(const Rational& r, const Integer& modulus)
{
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw Error(ErrorKind::NotPIntegral, "denominator not invertible modulo " + modulus.get_str());
    }
    Integer out = r.get_num() * inv;
    mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

PAdicContext::PAdicContext(std::int64_t prime, int precision_)
    : p(prime), precision(precision_)
{
    require_prime(p);
    if (precision < 1) {
        throw Error(ErrorKind::PreconditionViolated, "p-adic precision must be >= 1");
    }
}

Integer PAdicContext::modulus() const
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(precision));
    return out;
}

TruncatedPAdic TruncatedPAdic::truncate(int lower_precision) const
{
    if (lower_precision < 1 || lower_precision > precision) {
        throw Error(ErrorKind::PreconditionViolated, "truncation must lower the precision");
    }
    const PAdicContext ctx(p, lower_precision);
    Integer v = value;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), ctx.modulus().get_mpz_t());
    return {v, p, lower_precision};
}

TruncatedPAdic teichmuller(const Rational& a, const PAdicContext& ctx)
{
    if (a == 0 || valuation_p(a, ctx.p) != 0) {
        throw Error(ErrorKind::NotAUnit, "Teichmuller lift needs a p-adic unit");
    }
    const Integer modulus = ctx.modulus();
    const Integer exponent = static_cast<long>(ctx.p);
    Integer x = reduce_mod(a, modulus);
    // x_k = a^(p^k) stabilises mod p^N after at most N + 1 steps (N + 2 for p = 2).
    for (int step = 0; step <= ctx.precision + 2; ++step) {
        Integer next;
        mpz_powm(next.get_mpz_t(), x.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
        if (next == x) {
            return {x, ctx.p, ctx.precision};
        }
        x = next;
    }
    throw Error(ErrorKind::InternalInconsistency, "Frobenius iteration did not reach a fixed point");
}

TruncatedPAdic unit_mth_root(const Rational& u, std::int64_t m, const PAdicContext& ctx)
{
    if (m < 1 || gcd(m, ctx.p) != 1) {
        throw Error(ErrorKind::PreconditionViolated, "root order must be positive and prime to p");
    }
    if (u == 1) {
        return {Integer(1), ctx.p, ctx.precision};
    }
    if (u == 0 || valuation_p(u - 1, ctx.p) < 1) {
        throw Error(ErrorKind::PreconditionViolated, "input is not a principal unit");
    }
    const Integer modulus = ctx.modulus();
    const Integer target = reduce_mod(u, modulus);
    const Integer order = static_cast<long>(m);
    Integer x = 1;
    // Newton: x <- x - (x^m - u) / (m x^(m-1)); m x^(m-1) is a unit throughout.
    for (int step = 0; step <= ctx.precision + 1; ++step) {
        Integer power;
        mpz_powm(power.get_mpz_t(), x.get_mpz_t(), order.get_mpz_t(), modulus.get_mpz_t());
        Integer residual = power - target;
        mpz_fdiv_r(residual.get_mpz_t(), residual.get_mpz_t(), modulus.get_mpz_t());
        if (residual == 0) {
            return {x, ctx.p, ctx.precision};
        }
        Integer derivative;
        const Integer order_minus_one = order - 1;
        mpz_powm(derivative.get_mpz_t(), x.get_mpz_t(), order_minus_one.get_mpz_t(), modulus.get_mpz_t());
        derivative *= order;
        Integer inverse;
        mpz_invert(inverse.get_mpz_t(), derivative.get_mpz_t(), modulus.get_mpz_t());
        x -= residual * inverse;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    }
    throw Error(ErrorKind::InternalInconsistency, "Hensel lifting did not converge");
}

}  // namespace tamecft

#include "tamecft/sampling.hpp"

#include "tamecft/error.hpp"

namespace tamecft {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational Sampler::rational(std::int64_t bound)
{
    std::int64_t num = 0;
    while (num == 0) {
        num = uniform(-bound, bound);
    }
    return make_rational(num, uniform(1, bound));
}

Rational Sampler::principal_unit(std::int64_t p)
{
    // 1 + p * a / b with b prime to p.
    std::int64_t b = 0;
    do {
        b = uniform(1, 50);
    } while (b % p == 0);
    const Rational u = 1 + Rational(p) * make_rational(uniform(-500, 500), b);
    return u == 0 ? Rational(1) : u;
}

ClosedPoint Sampler::rational_point(std::int64_t p)
{
    std::int64_t b = 0;
    do {
        b = uniform(1, 4);
    } while (b % p == 0);
    return classify_point(Place::finite(Poly::linear(make_rational(uniform(-3 * p, 3 * p), b))), p);
}

ClosedPoint Sampler::unramified_point(std::int64_t p, int f)
{
    for (;;) {
        std::vector<Rational> c;
        FpPoly reduced;
        for (int i = 0; i < f; ++i) {
            const std::int64_t r = uniform(0, p - 1);
            c.emplace_back(r + p * uniform(-1, 1));
            reduced.push_back(static_cast<std::uint64_t>(r));
        }
        c.emplace_back(1);
        reduced.push_back(1);
        if (is_irreducible_mod_p(reduced, static_cast<std::uint64_t>(p))) {
            return classify_point(Place::finite(Poly(std::move(c))), p);
        }
    }
}

ClosedPoint Sampler::eisenstein_point(std::int64_t p, int e)
{
    std::vector<Rational> c;
    std::int64_t unit = 0;
    while (unit % p == 0) {
        unit = uniform(-p + 1, p - 1);
    }
    c.emplace_back(p * unit);
    for (int i = 1; i < e; ++i) {
        c.emplace_back(p * uniform(-2, 2));
    }
    c.emplace_back(1);
    return classify_point(Place::finite(Poly(std::move(c))), p);
}

ClosedPoint Sampler::supported_point(std::int64_t p)
{
    switch (uniform(0, 2)) {
    case 0: return rational_point(p);
    case 1: return unramified_point(p, static_cast<int>(uniform(2, 3)));
    default: return eisenstein_point(p, static_cast<int>(uniform(2, 3)));
    }
}

Instance Sampler::instance(bool require_eisenstein)
{
    const std::int64_t p = pick(sampled_primes);
    std::vector<std::int64_t> moduli;
    for (const auto m : sampled_moduli) {
        if (gcd(m, p) == 1) {
            moduli.push_back(m);
        }
    }
    const std::int64_t m = pick(moduli);
    const auto size = static_cast<std::size_t>(uniform(require_eisenstein ? 2 : 1, 5));
    std::vector<ClosedPoint> points{classify_point(Place::infinity(), p)};
    while (points.size() < size) {
        ClosedPoint x = (require_eisenstein && points.size() == 1) ? eisenstein_point(p, static_cast<int>(uniform(2, 3)))
                                                                    : supported_point(p);
        bool fresh = true;
        for (const auto& y : points) {
            fresh = fresh && !(y.place() == x.place());
        }
        if (fresh) {
            points.push_back(std::move(x));
        }
    }
    return Instance::make(p, m, std::move(points));
}

Poly Sampler::irreducible_factor()
{
    const int degree = static_cast<int>(uniform(1, 3));
    static const std::vector<std::int64_t> denominators{1, 1, 1, 2, 3, 4, 6};
    for (;;) {
        std::vector<Rational> c;
        for (int i = 0; i < degree; ++i) {
            c.push_back(make_rational(uniform(-9, 9), pick(denominators)));
        }
        c.emplace_back(1);
        Poly candidate(c);
        if (degree == 1) {
            return candidate;
        }
        // Irreducible mod 5 and monic 5-integral, hence irreducible over Q.
        FpPoly reduced;
        for (const auto& x : c) {
            reduced.push_back(static_cast<std::uint64_t>(reduce_mod(x, Integer(5)).get_ui()));
        }
        if (is_irreducible_mod_p(reduced, 5)) {
            return candidate;
        }
    }
}

RatFunc Sampler::rational_function()
{
    const auto count = uniform(0, 3);
    std::vector<RatFunc::Factor> factors;
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t e = 0;
        while (e == 0) {
            e = uniform(-3, 3);
        }
        factors.emplace_back(irreducible_factor(), static_cast<int>(e));
    }
    return RatFunc::from_factors(rational(12), factors);
}

RatFunc Sampler::rational_function_near(const RatFunc& other)
{
    const auto count = uniform(0, 3);
    std::vector<RatFunc::Factor> factors;
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t e = 0;
        while (e == 0) {
            e = uniform(-3, 3);
        }
        if (!other.factors().empty() && uniform(0, 2) == 0) {
            factors.emplace_back(pick(other.factors()).first, static_cast<int>(e));
        } else {
            factors.emplace_back(irreducible_factor(), static_cast<int>(e));
        }
    }
    return RatFunc::from_factors(rational(12), factors);
}

}  // namespace tamecft

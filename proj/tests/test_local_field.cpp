#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "tamecft/error.hpp"
#include "tamecft/local_field.hpp"
#include "tamecft/sampling.hpp"

using namespace tamecft;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InternalInconsistency;
}

// Least primitive root mod p, by order counting.
std::int64_t least_primitive_root(std::int64_t p)
{
    for (std::int64_t g = 1; g < p; ++g) {
        std::int64_t x = g, k = 1;
        while (x != 1) {
            x = x * g % p;
            ++k;
        }
        if (k == p - 1) {
            return g;
        }
    }
    return 0;
}

// Unit class at Q_p from first principles: strip p, reduce, brute-force log.
std::pair<std::int64_t, std::int64_t> unit_class_by_hand(long num, long den, std::int64_t p, std::int64_t m)
{
    std::int64_t v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    std::int64_t r = ((num % p) + p) % p;
    std::int64_t dinv = 1;
    while ((dinv * (((den % p) + p) % p)) % p != 1) {
        ++dinv;
    }
    r = r * dinv % p;
    const std::int64_t g = least_primitive_root(p);
    std::int64_t k = 0, x = 1;
    while (x != r) {
        x = x * g % p;
        ++k;
    }
    const std::int64_t d = std::gcd(m, p - 1);
    return {((v % m) + m) % m, k % d};
}

}  // namespace

TEST_CASE("classification examples at p = 5")
{
    auto a = classify_point("t-1", 5);
    CHECK(a.kind() == PointKind::Rational);
    CHECK(a.residue_degree() == 1);
    CHECK(a.ramification_index() == 1);
    CHECK(a.residue_order() == 5);

    auto b = classify_point("t^2+2", 5);
    CHECK(b.kind() == PointKind::Unramified);
    CHECK(b.residue_degree() == 2);
    CHECK(b.ramification_index() == 1);
    CHECK(b.residue_order() == 25);
    // -2 = 3 is not a square mod 5.
    for (int x = 0; x < 5; ++x) {
        CHECK((x * x + 2) % 5 != 0);
    }

    auto c = classify_point("t^2-5", 5);
    CHECK(c.kind() == PointKind::Eisenstein);
    CHECK(c.residue_degree() == 1);
    CHECK(c.ramification_index() == 2);
    CHECK(c.residue_order() == 5);
    CHECK(c.degree() == 2);

    auto inf = classify_point("inf", 5);
    CHECK(inf.is_infinity());
    CHECK(inf.kind() == PointKind::Rational);
}

TEST_CASE("classification errors")
{
    CHECK(kind_of([] { classify_point("t^2-1", 5); }) == ErrorKind::UnsupportedPoint);
    CHECK(kind_of([] { classify_point("2t+1", 5); }) == ErrorKind::NotMonic);
    CHECK(kind_of([] { classify_point("t-1/5", 5); }) == ErrorKind::NotPIntegral);
    CHECK(kind_of([] { classify_point("t", 6); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { classify_point("t^2-25", 5); }) == ErrorKind::UnsupportedPoint);
}

TEST_CASE("wild roots of unity are flagged")
{
    CHECK(base_point(2).wild_possible());
    CHECK(mu_group(base_point(2)).wild_possible);
    CHECK_FALSE(base_point(5).wild_possible());
    // e = 4 >= p - 1 at p = 5.
    CHECK(classify_point("t^4-5", 5).wild_possible());
    CHECK_FALSE(classify_point("t^3-5", 5).wild_possible());
    CHECK(classify_point("t^2-3", 3).wild_possible());
}

TEST_CASE("roots of unity")
{
    CHECK(mu_group(base_point(5)).group == FinAbGroup::cyclic(4));
    CHECK(mu_group(classify_point("t^2+2", 5)).group == FinAbGroup::cyclic(24));
    CHECK(mu_group(classify_point("t^2+2", 5), 6).group == FinAbGroup::cyclic(6));
    CHECK(mu_group(base_point(7), 4).group == FinAbGroup::cyclic(2));
    CHECK(mu_group(base_point(2)).group.is_trivial());
}

TEST_CASE("modulus must be prime to p")
{
    CHECK(kind_of([] { unit_class(2, base_point(5), 10); }) == ErrorKind::BadModulus);
    CHECK(kind_of([] { mu_group(base_point(3), 3); }) == ErrorKind::BadModulus);
    CHECK(kind_of([] { unit_class(0, base_point(5), 4); }) == ErrorKind::ZeroInput);
}

TEST_CASE("unit class examples in Q_5 mod 4")
{
    auto q5 = base_point(5);
    CHECK(unit_class(5, q5, 4) == UnitClass{1, 0, 4, 4});
    CHECK(unit_class(2, q5, 4) == UnitClass{0, 1, 4, 4});
    CHECK(unit_class(50, q5, 4) == UnitClass{2, 1, 4, 4});
}

TEST_CASE("unit classes at rational points match a hand computation")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(1, 5000);
    for (int i = 0; i < 400; ++i) {
        for (std::int64_t p : {3, 5, 7, 13}) {
            for (std::int64_t m : {2, 4, 6, 8, 12}) {
                if (m % p == 0) {
                    continue;
                }
                long a = num(rng), b = num(rng);
                auto [v, u] = unit_class_by_hand(a, b, p, m);
                auto c = unit_class(make_rational(a, b), base_point(p), m);
                CHECK(c.v == v);
                CHECK(c.u == u);
            }
        }
    }
}

TEST_CASE("unit class is a homomorphism killing m-th powers")
{
    Sampler s(32);
    for (int i = 0; i < 300; ++i) {
        const std::int64_t p = s.pick(sampled_primes);
        const std::int64_t m = s.pick(sampled_moduli);
        if (m % p == 0) {
            continue;
        }
        auto x = s.supported_point(p);
        Rational a = s.rational(), b = s.rational();
        auto ca = unit_class(a, x, m), cb = unit_class(b, x, m), cab = unit_class(a * b, x, m);
        CHECK(cab.v == (ca.v + cb.v) % m);
        CHECK(cab.u == (ca.u + cb.u) % ca.d);
        auto cm = unit_class(rational_pow(a, m), x, m);
        CHECK(cm.v == 0);
        CHECK(cm.u == 0);
    }
}

TEST_CASE("the base uniformizer has valuation e at Eisenstein points")
{
    Sampler s(33);
    for (int i = 0; i < 50; ++i) {
        const std::int64_t p = s.pick(sampled_primes);
        const int e = static_cast<int>(s.uniform(2, 3));
        auto x = s.eisenstein_point(p, e);
        CHECK(x.kind() == PointKind::Eisenstein);
        CHECK(unit_coordinates(p, x).valuation == e);
        CHECK(unit_coordinates(p, x).residue_log == 0);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "brute_force_groups.hpp"
#include "tamecft/error.hpp"
#include "tamecft/report.hpp"
#include "tamecft/sampling.hpp"
#include "tamecft/tame_cft.hpp"

using namespace tamecft;

namespace {

Instance I(std::int64_t p, std::int64_t m, const std::vector<std::string>& points)
{
    return Instance::make(p, m, points);
}

FinAbGroup G(std::vector<long> factors)
{
    FinAbGroup g;
    for (long f : factors) {
        g.factors.emplace_back(f);
    }
    return g;
}

std::string invalid_message(std::int64_t p, std::int64_t m, const std::vector<std::string>& pts)
{
    try {
        I(p, m, pts);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInstance);
        return e.what();
    }
    FAIL("instance accepted");
    return {};
}

// k with G_x^k = g, g the least primitive root mod p, found by stepping
// through powers of the point's generator.
std::int64_t inclusion_image(const ClosedPoint& x)
{
    const std::int64_t p = x.prime();
    std::int64_t g = 1;
    for (;; ++g) {
        std::int64_t y = g, k = 1;
        while (y != 1) {
            y = y * g % p;
            ++k;
        }
        if (k == p - 1) {
            break;
        }
    }
    const FqField& k = x.residue_field();
    const FqElem target = k.from_integer(g);
    FqElem y = k.one();
    for (std::int64_t i = 0;; ++i) {
        if (y == target) {
            return i;
        }
        y = k.mul(y, k.generator());
    }
}

struct Oracles {
    FinAbGroup jt, jt_mod_m, et_mod_m;
};

bool small_enough(const Instance& inst)
{
    std::int64_t n = 1;
    for (const auto& x : inst.points()) {
        n *= static_cast<std::int64_t>(x.tame_order());
    }
    return n <= 50000;
}

Oracles oracles(const Instance& inst)
{
    const std::int64_t m = inst.modulus();
    oracle::FiniteQuotient full, et;
    oracle::Tuple inc, pulled;
    for (const auto& x : inst.points()) {
        const std::int64_t c = inclusion_image(x);
        const auto q1 = static_cast<std::int64_t>(x.tame_order());
        const std::int64_t d = std::gcd(m, q1);
        full.moduli.push_back(q1);
        inc.push_back(c);
        et.moduli.push_back(d);
        pulled.push_back(x.ramification_index() * c);
    }
    full.subgroup_gens.push_back(full.reduce(inc));
    et.subgroup_gens.push_back(et.reduce(pulled));
    oracle::FiniteQuotient reduced = full;
    for (std::size_t i = 0; i < full.moduli.size(); ++i) {
        oracle::Tuple e(full.moduli.size(), 0);
        e[i] = m;
        reduced.subgroup_gens.push_back(full.reduce(e));
    }
    return {oracle::structure(full), oracle::structure(reduced), oracle::structure(et)};
}

}  // namespace

TEST_CASE("worked instance at p = 5, m = 4")
{
    auto inst = I(5, 4, {"inf", "t", "t-1"});
    auto o = oracles(inst);
    CHECK(o.jt == G({4, 4}));
    CHECK(o.et_mod_m == G({4, 4}));
    CHECK(jt_group(inst).group == G({4, 4}));
    CHECK(et_group_mod_m(inst) == G({4, 4}));
    auto gr1 = gr1_reciprocity(inst);
    CHECK(gr1.verdict.isomorphism());
}

TEST_CASE("J^t examples")
{
    CHECK(jt_group(I(5, 4, {"inf"})).group.is_trivial());
    CHECK(jt_group(I(5, 4, {"t", "inf"})).group == G({4}));
    auto r = jt_group(I(5, 4, {"t", "t-1", "inf"}));
    CHECK(r.group == G({4, 4}));
    CHECK(r.order_prime_to_p);
    CHECK(r.inclusion_row_agrees);
    CHECK_FALSE(r.prime_to_p_only);
    CHECK(jt_group(I(5, 4, {"inf", "t^2+2"})).group == G({24}));
}

TEST_CASE("E^t/m examples")
{
    CHECK(et_group_mod_m(I(5, 4, {"inf"})).is_trivial());
    CHECK(et_group_mod_m(I(5, 3, {"inf"})).is_trivial());
    CHECK(et_group_mod_m(I(5, 4, {"t", "inf"})) == G({4}));
    CHECK(et_group_mod_m(I(5, 4, {"t", "t-1", "inf"})) == G({4, 4}));
}

TEST_CASE("gr1 examples")
{
    CHECK(gr1_reciprocity(I(5, 4, {"inf"})).verdict.isomorphism());
    auto u = gr1_reciprocity(I(5, 4, {"t^2+2", "inf"}));
    CHECK(u.verdict.isomorphism());
    CHECK(u.map.source_group() == G({4}));
    CHECK(u.map.target_group() == G({4}));
}

TEST_CASE("Hilbert square examples")
{
    CHECK(check_hilbert_square(I(5, 4, {"t^2-5", "inf"})));
    CHECK(check_hilbert_square(I(2, 3, {"t", "inf"})));
    for (const auto& c : hilbert_square_details(I(5, 4, {"t^2-5", "t^2+2", "inf"}))) {
        CHECK(c.commutes);
        CHECK(c.via_k2 == c.via_mu);
        CHECK(c.via_k2 == c.direct);
    }
}

TEST_CASE("gr0 examples")
{
    auto a = gr0_reciprocity(I(5, 4, {"inf"}));
    CHECK(a.verdict.isomorphism());
    CHECK(a.map.source_group() == G({4, 4}));
    CHECK(a.graded_cokernel_order == 1);
    auto b = gr0_reciprocity(I(5, 3, {"inf"}));
    CHECK(b.verdict.isomorphism());
    CHECK(b.map.source_group() == G({3}));
}

TEST_CASE("full report of the worked instance")
{
    auto r = full_report(I(5, 4, {"t", "t-1", "inf"}));
    CHECK(r.jt == G({4, 4}));
    CHECK(r.et_mod_m == G({4, 4}));
    CHECK(r.all_pass());
    CHECK(r.hilbert_square);
    CHECK(r.gr1.isomorphism);
    CHECK(r.gr0.isomorphism);
}

TEST_CASE("invalid instances")
{
    CHECK(invalid_message(5, 4, {"t", "t-1"}).find("S must contain infinity") != std::string::npos);
    CHECK(invalid_message(5, 5, {"inf"}).find("modulus must be prime to p") != std::string::npos);
    CHECK(invalid_message(5, 10, {"inf"}).find("modulus must be prime to p") != std::string::npos);
    CHECK(invalid_message(5, 1, {"inf"}).find("modulus") != std::string::npos);
    CHECK(invalid_message(6, 5, {"inf"}).find("prime") != std::string::npos);
    CHECK(invalid_message(5, 4, {"inf", "t", "t"}).find("twice") != std::string::npos);
    CHECK(invalid_message(5, 4, {"inf", "t^2-1"}).find("t^2-1") != std::string::npos);
}

TEST_CASE("wild points are certified as prime-to-p only")
{
    auto r = jt_group(I(3, 2, {"inf", "t^2-3"}));
    CHECK(r.prime_to_p_only);
    CHECK(r.order_prime_to_p);
    CHECK(jt_group(I(2, 3, {"inf", "t"})).prime_to_p_only);
}

TEST_CASE("groups agree with enumeration on random instances")
{
    Sampler s(51);
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        auto inst = s.instance(i % 3 == 0);
        if (!small_enough(inst)) {
            continue;
        }
        ++checked;
        auto o = oracles(inst);
        auto jt = jt_group(inst);
        CHECK(jt.group == o.jt);
        CHECK(jt.inclusion_row_agrees);
        CHECK(jt.group.mod(inst.modulus()) == o.jt_mod_m);
        CHECK(jt_mod_m_presentation(inst).group() == o.jt_mod_m);
        CHECK(et_group_mod_m(inst) == o.et_mod_m);
    }
    CHECK(checked >= 50);
}

TEST_CASE("reciprocity invariants on random instances")
{
    Sampler s(52);
    for (int i = 0; i < 100; ++i) {
        auto inst = s.instance(i % 4 == 0);
        auto jt = jt_group(inst);
        CHECK(jt.order_prime_to_p);
        CHECK(et_group_mod_m(inst) == jt.group.mod(inst.modulus()));
        auto gr1 = gr1_reciprocity(inst);
        CHECK(gr1.verdict.surjective);
        CHECK(gr1.verdict.injective);
        oracle::FiniteHom f;
        if (small_enough(inst) && oracle::from_hom(gr1.map, &f)) {
            CHECK(oracle::kernel_of(f).is_trivial());
            CHECK(oracle::cokernel_of(f).is_trivial());
        }
        auto gr0 = gr0_reciprocity(inst);
        CHECK(gr0.verdict.isomorphism());
        CHECK(gr0.map.source_group() ==
              FinAbGroup::from_cyclic_orders({inst.modulus(), gcd(inst.modulus(), inst.prime() - 1)}));
        CHECK(check_hilbert_square(inst));
    }
}

TEST_CASE("adding a rational point")
{
    Sampler s(53);
    int pairs = 0;
    while (pairs < 20) {
        auto inst = s.instance(pairs % 2 == 0);
        ClosedPoint x = s.rational_point(inst.prime());
        bool fresh = true;
        for (const auto& y : inst.points()) {
            fresh = fresh && !(y.place() == x.place());
        }
        if (!fresh) {
            continue;
        }
        ++pairs;
        auto bigger = inst.with_point(x);
        const Integer p1 = static_cast<long>(inst.prime() - 1);
        const Integer d0 = static_cast<long>(gcd(inst.modulus(), inst.prime() - 1));
        CHECK(jt_group(bigger).group.order() == jt_group(inst).group.order() * p1);
        CHECK(et_group_mod_m(bigger).order() == et_group_mod_m(inst).order() * d0);
        CHECK(jt_mod_m_presentation(bigger).group().order() == jt_mod_m_presentation(inst).group().order() * d0);
    }
}

TEST_CASE("the affine line has no tame classes")
{
    for (std::int64_t p : {2, 3, 5, 7, 13}) {
        for (std::int64_t m : {2, 3, 4, 5, 12}) {
            if (m % p == 0) {
                continue;
            }
            auto inst = I(p, m, {"inf"});
            CHECK(jt_group(inst).group.is_trivial());
            CHECK(et_group_mod_m(inst).is_trivial());
        }
    }
}

#include "tamecft/selftest.hpp"

#include <functional>
#include <sstream>

#include "tamecft/error.hpp"
#include "tamecft/milnor.hpp"
#include "tamecft/sampling.hpp"
#include "tamecft/tame_cft.hpp"

namespace tamecft {

bool SelftestSummary::ok() const
{
    for (const auto& s : suites) {
        if (s.failures != 0) {
            return false;
        }
    }
    return true;
}

namespace {

struct LocalCase {
    ClosedPoint x;
    std::int64_t m;
};

LocalCase local_case(Sampler& s)
{
    const std::int64_t p = s.pick(sampled_primes);
    std::int64_t m = 0;
    do {
        m = s.pick(sampled_moduli);
    } while (gcd(m, p) != 1);
    return {s.supported_point(p), m};
}

Rational nonzero_non_one(Sampler& s)
{
    Rational a = 1;
    while (a == 1) {
        a = s.rational();
    }
    return a;
}

std::vector<std::pair<std::int64_t, std::int64_t>> pairing_cases()
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto p : sampled_primes) {
        for (std::int64_t d = 1; d <= p - 1; ++d) {
            if ((p - 1) % d == 0) {
                out.emplace_back(p, d);
            }
        }
    }
    return out;
}

}  // namespace

SelftestSummary run_selftest(std::uint64_t seed, std::size_t size, int precision)
{
    SelftestSummary summary;
    summary.seed = seed;
    Sampler s(seed);
    std::ostringstream log;
    log << "selftest seed=" << seed << " size=" << size << " precision=" << precision << "\n";

    const auto run = [&](const std::string& name, const std::function<bool(std::size_t)>& one_case) {
        SuiteResult result{name, size, 0};
        for (std::size_t i = 0; i < size; ++i) {
            bool passed = false;
            try {
                passed = one_case(i);
            } catch (const Error& e) {
                log << "  " << name << " case " << i << " raised " << e.what() << "\n";
            }
            if (!passed) {
                ++result.failures;
            }
        }
        if (size == 0) {
            log << "suite " << name << ": 0 cases (vacuous pass)\n";
        } else {
            log << "suite " << name << ": " << result.cases << " cases, " << result.failures << " failures\n";
        }
        summary.suites.push_back(result);
    };

    run("steinberg", [&](std::size_t) {
        const LocalCase c = local_case(s);
        const Rational a = nonzero_non_one(s);
        return tame_hilbert(a, 1 - a, c.x, c.m) == 0;
    });
    run("bilinearity", [&](std::size_t) {
        const LocalCase c = local_case(s);
        const Rational a = s.rational();
        const Rational a2 = s.rational();
        const Rational b = s.rational();
        const std::int64_t d = c.x.tame_modulus(c.m);
        return tame_hilbert(a * a2, b, c.x, c.m) ==
               mod(tame_hilbert(a, b, c.x, c.m) + tame_hilbert(a2, b, c.x, c.m), d);
    });
    run("antisymmetry", [&](std::size_t) {
        const LocalCase c = local_case(s);
        const Rational a = s.rational();
        const Rational b = s.rational();
        const std::int64_t d = c.x.tame_modulus(c.m);
        return tame_hilbert(a, b, c.x, c.m) == mod(-tame_hilbert(b, a, c.x, c.m), d);
    });
    run("weil_reciprocity", [&](std::size_t) {
        const RatFunc f = s.rational_function();
        const RatFunc g = s.rational_function_near(f);
        return weil_check(f, g).ok;
    });
    const auto pairings = pairing_cases();
    run("pairing_nondegeneracy", [&](std::size_t i) {
        const auto [p, d] = pairings[i % pairings.size()];
        return hilbert_pairing_is_perfect(p, d);
    });
    run("et_equals_jt_mod_m", [&](std::size_t) {
        const Instance inst = s.instance(s.uniform(0, 3) == 0);
        return et_group_mod_m(inst) == jt_group(inst).group.mod(static_cast<long>(inst.modulus()));
    });
    run("gr1_surjective", [&](std::size_t) {
        const Instance inst = s.instance(s.uniform(0, 3) == 0);
        return gr1_reciprocity(inst).verdict.surjective;
    });
    run("hilbert_square", [&](std::size_t) {
        const Instance inst = s.instance(s.uniform(0, 1) == 0);
        return check_hilbert_square(inst);
    });
    run("unit_divisibility", [&](std::size_t) {
        const std::int64_t p = s.pick(sampled_primes);
        std::int64_t m = 0;
        do {
            m = s.pick(sampled_moduli);
        } while (gcd(m, p) != 1);
        const PAdicContext ctx(p, precision);
        const Rational u = s.principal_unit(p);
        const TruncatedPAdic v = unit_mth_root(u, m, ctx);
        Integer power;
        const Integer modulus = ctx.modulus();
        mpz_powm_ui(power.get_mpz_t(), v.value.get_mpz_t(), static_cast<unsigned long>(m), modulus.get_mpz_t());
        // m-th powers of units leave unit classes unchanged.
        const ClosedPoint x = s.supported_point(p);
        const Rational a = s.rational();
        const Rational w = s.rational();
        const Rational unit = w * rational_pow(Rational(p), -valuation_p(w, p));
        const bool classes = unit_class(rational_pow(unit, m) * a, x, m) == unit_class(a, x, m);
        return power == reduce_mod(u, modulus) && classes;
    });

    summary.transcript = log.str();
    return summary;
}

}  // namespace tamecft

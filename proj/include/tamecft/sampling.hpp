#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tamecft/local_field.hpp"
#include "tamecft/milnor.hpp"
#include "tamecft/tame_cft.hpp"

namespace tamecft {

/// Seeded generators shared by the self-test and the acceptance suite.
/// All draws go through std::mt19937_64 so a seed fixes the whole sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    template <typename T>
    const T& pick(const std::vector<T>& items)
    {
        return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
    }

    /// Nonzero rational with numerator and denominator of bounded size.
    Rational rational(std::int64_t bound = 30);
    /// Nonzero p-adic unit in 1 + pZ (restricted to rationals).
    Rational principal_unit(std::int64_t p);

    ClosedPoint rational_point(std::int64_t p);
    /// Irreducible mod p of degree f.
    ClosedPoint unramified_point(std::int64_t p, int f);
    /// Eisenstein at p of degree e.
    ClosedPoint eisenstein_point(std::int64_t p, int e);
    /// Any supported kind: rational, unramified f in {2,3}, Eisenstein e in {2,3}.
    ClosedPoint supported_point(std::int64_t p);

    /// p in {3,5,7,13}, |S| in 1..5 (infinity included), m in
    /// {2,3,4,6,8,12} prime to p. With require_eisenstein one of the finite
    /// points is Eisenstein.
    Instance instance(bool require_eisenstein = false);

    /// c * prod pi_i^e_i with at most three factors of degree at most three,
    /// irreducible over Q and with 5-integral coefficients.
    RatFunc rational_function();
    /// Like rational_function, but sometimes sharing factors with other.
    RatFunc rational_function_near(const RatFunc& other);

    std::mt19937_64& engine() { return rng_; }

private:
    Poly irreducible_factor();

    std::mt19937_64 rng_;
};

inline const std::vector<std::int64_t> sampled_primes{3, 5, 7, 13};
inline const std::vector<std::int64_t> sampled_moduli{2, 3, 4, 6, 8, 12};

}  // namespace tamecft

#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace tamecft {

/// Dense polynomial over F_p, lowest degree first, trimmed.
using FpPoly = std::vector<std::uint64_t>;

/// Remainder of a modulo b over F_p; b must be nonzero.
FpPoly fp_poly_mod(FpPoly a, const FpPoly& b, std::uint64_t p);

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree at most deg/2. Meant for desk-scale degrees.
bool is_irreducible_mod_p(const FpPoly& f, std::uint64_t p);

/// Element of F_q: coefficient vector (length f) modulo the field's modulus.
struct FqElem {
    std::vector<std::uint64_t> coeffs;

    bool operator==(const FqElem&) const = default;
};

/// F_{p^f} with a canonical modulus and a canonical primitive element.
///
/// Elements are ordered by their index sum_i c_i p^i (constant coefficient
/// least significant). The modulus is the monic irreducible t^f + r(t) with
/// the least index of r; the generator is the primitive element of least
/// index. Two fields built from the same (p, f) are identical.
class FqField {
public:
    /// make_field(p, f)
    static FqField make(std::int64_t p, int f);

    std::uint64_t characteristic() const { return p_; }
    int degree() const { return f_; }
    std::uint64_t order() const { return q_; }
    /// Monic modulus, lowest degree first (length f + 1).
    const FpPoly& modulus() const { return modulus_; }
    const FqElem& generator() const { return generator_; }

    FqElem zero() const;
    FqElem one() const;
    /// The image of an integer in the prime field F_p ⊂ F_q.
    FqElem from_integer(std::int64_t c) const;
    FqElem from_index(std::uint64_t index) const;
    std::uint64_t index(const FqElem& x) const;

    bool is_zero(const FqElem& x) const;
    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(FqElem base, std::uint64_t exponent) const;
    std::uint64_t multiplicative_order(const FqElem& x) const;

    /// a with generator^a = x, 0 <= a < q - 1. Baby-step giant-step, or a
    /// linear scan when q < 1000.
    std::uint64_t dlog(const FqElem& x) const;

    bool operator==(const FqField& o) const
    {
        return p_ == o.p_ && f_ == o.f_ && modulus_ == o.modulus_ && generator_ == o.generator_;
    }

private:
    FqField(std::uint64_t p, int f, FpPoly modulus);
    void build_baby_steps();

    std::uint64_t p_ = 0;
    int f_ = 0;
    std::uint64_t q_ = 0;
    FpPoly modulus_;
    FqElem generator_;
    std::vector<std::uint64_t> group_primes_;  // primes dividing q - 1

    // Baby steps generator^j -> j for j < giant_stride_, shared between copies.
    std::shared_ptr<const std::unordered_map<std::uint64_t, std::uint64_t>> baby_steps_;
    std::uint64_t giant_stride_ = 0;
    FqElem giant_step_;  // generator^(-giant_stride_)
};

}  // namespace tamecft

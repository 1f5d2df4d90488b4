#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamecft/abgroup.hpp"
#include "tamecft/local_field.hpp"
#include "tamecft/poly.hpp"

namespace tamecft {

/// Nonzero element c * prod pi_i^e_i of Q(t). Factors are monic, squarefree,
/// pairwise coprime and carry nonzero exponents; they are kept sorted so equal
/// functions have equal representations. The valuation at infinity is implied:
/// -sum e_i deg pi_i.
class RatFunc {
public:
    using Factor = std::pair<Poly, int>;

    /// Normalises an arbitrary product: leading coefficients move into the
    /// constant, repeated roots are split off and overlapping factors are
    /// refined to a coprime base.
    static RatFunc from_factors(const Rational& constant, const std::vector<Factor>& factors);
    static RatFunc constant(const Rational& c);
    static RatFunc parse(std::string_view text);

    const Rational& constant_factor() const { return constant_; }
    const std::vector<Factor>& factors() const { return factors_; }
    /// sum e_i deg pi_i, i.e. minus the valuation at infinity.
    int degree() const;

    /// The same function in the chart s = 1/t around infinity.
    RatFunc to_infinity_chart() const;

    Rational eval(const Rational& t) const;

    /// Renders as c * (poly1)^e1 * (poly2)^e2 ...
    std::string to_string() const;

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc pow(int exponent) const;

    bool operator==(const RatFunc&) const = default;

private:
    Rational constant_ = 1;
    std::vector<Factor> factors_;
};

/// Refines a list of squarefree polynomials into pairwise coprime monic ones
/// generating the same divisors.
std::vector<Poly> coprime_base(const std::vector<Poly>& polys);

int valuation_at(const RatFunc& f, const Place& x);

/// N_{k(x)/k} of the tame symbol at x of {f, g}, computed with resultants:
/// (-1)^(n v w) Res(pi, F)^w Res(pi, G)^(-v), F and G being f and g with
/// the pi-part removed. Infinity is handled in the chart s = 1/t.
Rational norm_of_tame_symbol(const RatFunc& f, const RatFunc& g, const Place& x);

struct WeilPointValue {
    Place place;
    Rational value;
};

struct WeilReport {
    Rational product;
    bool ok = false;
    std::vector<WeilPointValue> per_point;
};

/// Product over the joint support and infinity of norm_of_tame_symbol.
WeilReport weil_check(const RatFunc& f, const RatFunc& g);

/// log_G of the residue of (-1)^(vw) a^w b^(-v) in F_q, reduced mod q - 1,
/// for elements given by their unit coordinates at x.
std::uint64_t tame_symbol_log(const UnitCoordinates& a, const UnitCoordinates& b, const ClosedPoint& x);

/// Coordinate in mu_d (relative to G^((q-1)/d)) of the tame Hilbert symbol
/// (a, b) at x, d = gcd(m, q - 1).
std::int64_t tame_hilbert(const Rational& a, const Rational& b, const ClosedPoint& x, std::int64_t m);

/// K_2(k(x))/m = Z/d with generator {teichmuller(G), uniformizer}.
FinAbGroup k2_mod_m(const ClosedPoint& x, std::int64_t m);

/// Pull-back K_2(Q_p)/m -> K_2(k(x))/m: 1 -> e * log_G(g).
AbHom k2_base_to_point(const ClosedPoint& x, std::int64_t m);

/// Inclusion of roots of unity mu(Q_p)/m -> mu(k(x))/m: 1 -> log_G(g).
AbHom mu_base_to_point(const ClosedPoint& x, std::int64_t m);

/// The map on mu/m matching pull-back of K_2 under the Hilbert symbols:
/// zeta -> zeta^e, i.e. 1 -> e * log_G(g). Coincides with the inclusion on
/// unramified points.
AbHom mu_restriction_to_point(const ClosedPoint& x, std::int64_t m);

/// Hilbert symbol K_2(k(x))/m -> mu(k(x))/m in canonical coordinates (the
/// identity). Re-derived from the symbol formula; a mismatch raises
/// InternalInconsistency.
AbHom hilbert_iso_at_point(const ClosedPoint& x, std::int64_t m);

/// Local reciprocity Q_p^x/m -> G_k/m in (valuation, tame) coordinates,
/// normalised so the uniformizer goes to Frobenius.
AbHom local_reciprocity_base(std::int64_t p, std::int64_t m);

inline constexpr std::string_view reciprocity_normalization = "uniformizer -> arithmetic Frobenius";

/// Brute force: the tame Hilbert pairing on Q_p^x/d x Q_p^x/d (d | p - 1) has
/// trivial left and right kernels.
bool hilbert_pairing_is_perfect(std::int64_t p, std::int64_t d);

}  // namespace tamecft

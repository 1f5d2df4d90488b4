#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tamecft/abgroup.hpp"
#include "tamecft/finite_field.hpp"
#include "tamecft/poly.hpp"

namespace tamecft {

/// A place of the rational function field Q(t): infinity, or a monic
/// polynomial (irreducible for closed points proper).
struct Place {
    std::optional<Poly> poly;  // nullopt means infinity

    static Place infinity() { return {}; }
    static Place finite(Poly p) { return {std::move(p)}; }

    bool is_infinity() const { return !poly.has_value(); }
    /// Degree of the residue field over the base: 1 at infinity.
    int degree() const { return poly ? poly->degree() : 1; }
    std::string to_string() const { return poly ? poly->to_string() : "inf"; }

    bool operator==(const Place&) const = default;
};

enum class PointKind { Rational, Unramified, Eisenstein };

std::string_view to_string(PointKind kind);

/// A closed point of P^1 over Q_p with the invariants of its residue field
/// k(x): residue degree f, ramification index e (n = e f) and the residue
/// field F_q.
class ClosedPoint {
public:
    const Place& place() const { return place_; }
    bool is_infinity() const { return place_.is_infinity(); }
    PointKind kind() const { return kind_; }
    std::int64_t prime() const { return p_; }
    int residue_degree() const { return f_; }
    int ramification_index() const { return e_; }
    int degree() const { return e_ * f_; }
    std::uint64_t residue_order() const { return residue_field_.order(); }
    const FqField& residue_field() const { return residue_field_; }

    /// q - 1: order of the tame roots of unity in k(x).
    std::uint64_t tame_order() const { return residue_order() - 1; }
    /// gcd(m, q - 1)
    std::int64_t tame_modulus(std::int64_t m) const;
    /// A nontrivial p-power root of unity in k(x) cannot be ruled out
    /// (p = 2, or e >= p - 1).
    bool wild_possible() const;

    std::string to_string() const { return place_.to_string(); }

    friend ClosedPoint classify_point(const Place& place, std::int64_t p);

private:
    ClosedPoint(Place place, PointKind kind, std::int64_t p, int f, int e, FqField residue);

    Place place_;
    PointKind kind_;
    std::int64_t p_;
    int f_;
    int e_;
    FqField residue_field_;
};

/// Rational (infinity or degree one), Unramified (irreducible mod p) or
/// Eisenstein at p. Anything else raises UnsupportedPoint.
ClosedPoint classify_point(const Place& place, std::int64_t p);
/// "inf" or a monic polynomial in t.
ClosedPoint classify_point(std::string_view text, std::int64_t p);

/// The base field Q_p viewed as the residue field of a rational point.
ClosedPoint base_point(std::int64_t p);

void require_modulus_prime_to_p(std::int64_t m, std::int64_t p);

struct MuGroup {
    FinAbGroup group;
    bool wild_possible = false;
};

/// Tame roots of unity of k(x): Z/(q-1).
MuGroup mu_group(const ClosedPoint& x);
/// Tame roots of unity modulo m: Z/gcd(m, q-1).
MuGroup mu_group(const ClosedPoint& x, std::int64_t m);

/// Valuation in k(x) and dlog (base: the canonical generator of F_q) of the
/// residue of a * p^(-v_p(a)). The residue log is reduced mod q - 1.
struct UnitCoordinates {
    std::int64_t valuation = 0;
    std::uint64_t residue_log = 0;
};

UnitCoordinates unit_coordinates(const Rational& a, const ClosedPoint& x);

/// Class of a in k(x)^x / m = Z/m + Z/d, d = gcd(m, q-1).
struct UnitClass {
    std::int64_t v = 0;
    std::int64_t u = 0;
    std::int64_t m = 0;
    std::int64_t d = 1;

    bool operator==(const UnitClass&) const = default;
};

UnitClass unit_class(const Rational& a, const ClosedPoint& x, std::int64_t m);

}  // namespace tamecft

#include "tamecft/local_field.hpp"

#include "tamecft/error.hpp"

namespace tamecft {

std::string_view to_string(PointKind kind)
{
    switch (kind) {
    case PointKind::Rational: return "rational";
    case PointKind::Unramified: return "unramified";
    case PointKind::Eisenstein: return "eisenstein";
    }
    return "unknown";
}

ClosedPoint::ClosedPoint(Place place, PointKind kind, std::int64_t p, int f, int e, FqField residue)
    : place_(std::move(place)), kind_(kind), p_(p), f_(f), e_(e), residue_field_(std::move(residue))
{
}

std::int64_t ClosedPoint::tame_modulus(std::int64_t m) const
{
    return gcd(m, static_cast<std::int64_t>(tame_order()));
}

bool ClosedPoint::wild_possible() const
{
    return p_ == 2 || e_ >= p_ - 1;
}

ClosedPoint classify_point(const Place& place, std::int64_t p)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (place.is_infinity()) {
        return ClosedPoint(place, PointKind::Rational, p, 1, 1, FqField::make(p, 1));
    }
    const Poly& pi = *place.poly;
    if (pi.degree() < 1) {
        throw Error(ErrorKind::UnsupportedPoint, "a closed point needs a nonconstant polynomial");
    }
    if (!pi.is_monic()) {
        throw Error(ErrorKind::NotMonic, pi.to_string() + " is not monic");
    }
    for (const auto& c : pi.coefficients()) {
        if (c != 0 && valuation_p(c, p) < 0) {
            throw Error(ErrorKind::NotPIntegral, pi.to_string() + " has a coefficient that is not " +
                                                     std::to_string(p) + "-integral");
        }
    }
    const int n = pi.degree();
    if (n == 1) {
        return ClosedPoint(place, PointKind::Rational, p, 1, 1, FqField::make(p, 1));
    }
    FpPoly reduced;
    const Integer pp = static_cast<long>(p);
    for (const auto& c : pi.coefficients()) {
        reduced.push_back(static_cast<std::uint64_t>(reduce_mod(c, pp).get_ui()));
    }
    if (is_irreducible_mod_p(reduced, static_cast<std::uint64_t>(p))) {
        return ClosedPoint(place, PointKind::Unramified, p, n, 1, FqField::make(p, n));
    }
    const Rational c0 = pi.coeff(0);
    bool eisenstein = c0 != 0 && valuation_p(c0, p) == 1;
    for (int i = 1; i < n && eisenstein; ++i) {
        const Rational c = pi.coeff(i);
        eisenstein = c == 0 || valuation_p(c, p) >= 1;
    }
    if (eisenstein) {
        return ClosedPoint(place, PointKind::Eisenstein, p, 1, n, FqField::make(p, 1));
    }
    throw Error(ErrorKind::UnsupportedPoint,
                pi.to_string() + " is neither linear, irreducible mod " + std::to_string(p) +
                    ", nor Eisenstein at " + std::to_string(p) +
                    "; split the point into factors over Q_p of one of these kinds");
}

ClosedPoint classify_point(std::string_view text, std::int64_t p)
{
    std::string trimmed;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            trimmed.push_back(c);
        }
    }
    if (trimmed == "inf" || trimmed == "infinity" || trimmed == "oo") {
        return classify_point(Place::infinity(), p);
    }
    return classify_point(Place::finite(parse_poly(trimmed)), p);
}

ClosedPoint base_point(std::int64_t p)
{
    return classify_point(Place::infinity(), p);
}

void require_modulus_prime_to_p(std::int64_t m, std::int64_t p)
{
    if (m < 1 || gcd(m, p) != 1) {
        throw Error(ErrorKind::BadModulus, "modulus " + std::to_string(m) + " must be positive and prime to p = " +
                                               std::to_string(p));
    }
}

MuGroup mu_group(const ClosedPoint& x)
{
    return {FinAbGroup::cyclic(static_cast<unsigned long>(x.tame_order())), x.wild_possible()};
}

MuGroup mu_group(const ClosedPoint& x, std::int64_t m)
{
    require_modulus_prime_to_p(m, x.prime());
    return {FinAbGroup::cyclic(static_cast<long>(x.tame_modulus(m))), x.wild_possible()};
}

UnitCoordinates unit_coordinates(const Rational& a, const ClosedPoint& x)
{
    if (a == 0) {
        throw Error(ErrorKind::ZeroInput, "zero is not a unit class");
    }
    const std::int64_t p = x.prime();
    const int vp = valuation_p(a, p);
    Rational unit = a;
    const Integer pp = static_cast<long>(p);
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(vp < 0 ? -vp : vp));
    if (vp > 0) {
        unit /= Rational(scale);
    } else if (vp < 0) {
        unit *= Rational(scale);
    }
    const std::int64_t residue = reduce_mod(unit, pp).get_si();
    const FqField& field = x.residue_field();
    return {static_cast<std::int64_t>(x.ramification_index()) * vp, field.dlog(field.from_integer(residue))};
}

UnitClass unit_class(const Rational& a, const ClosedPoint& x, std::int64_t m)
{
    require_modulus_prime_to_p(m, x.prime());
    const UnitCoordinates c = unit_coordinates(a, x);
    const std::int64_t d = x.tame_modulus(m);
    return {mod(c.valuation, m), static_cast<std::int64_t>(c.residue_log % static_cast<std::uint64_t>(d)), m, d};
}

}  // namespace tamecft

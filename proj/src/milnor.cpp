#include "tamecft/milnor.hpp"

#include <algorithm>
#include <sstream>

#include "tamecft/error.hpp"

namespace tamecft {

namespace {

bool poly_less(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) {
            return ca[i] < cb[i];
        }
    }
    return false;
}

/// Splits squarefree pairwise-overlapping pieces until they are coprime.
std::vector<RatFunc::Factor> refine(std::vector<RatFunc::Factor> pieces)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pieces.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < pieces.size() && !changed; ++j) {
                const Poly g = gcd(pieces[i].first, pieces[j].first);
                if (g.degree() < 1) {
                    continue;
                }
                const auto [pi, ei] = pieces[i];
                const auto [pj, ej] = pieces[j];
                pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(j));
                pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
                const Poly ri = divmod(pi, g).first;
                const Poly rj = divmod(pj, g).first;
                if (ri.degree() > 0) {
                    pieces.emplace_back(ri, ei);
                }
                if (rj.degree() > 0) {
                    pieces.emplace_back(rj, ej);
                }
                pieces.emplace_back(g, ei + ej);
                changed = true;
            }
        }
    }
    std::erase_if(pieces, [](const RatFunc::Factor& f) { return f.second == 0; });
    std::sort(pieces.begin(), pieces.end(),
              [](const RatFunc::Factor& a, const RatFunc::Factor& b) { return poly_less(a.first, b.first); });
    return pieces;
}

}  // namespace

RatFunc RatFunc::from_factors(const Rational& constant, const std::vector<Factor>& factors)
{
    if (constant == 0) {
        throw Error(ErrorKind::ZeroInput, "rational function with zero constant");
    }
    RatFunc out;
    out.constant_ = constant;
    std::vector<Factor> pieces;
    for (const auto& [poly, exponent] : factors) {
        if (poly.is_zero()) {
            throw Error(ErrorKind::ZeroInput, "zero factor in a rational function");
        }
        out.constant_ *= rational_pow(poly.leading(), exponent);
        if (poly.degree() == 0) {
            continue;
        }
        for (const auto& [part, multiplicity] : squarefree_decomposition(poly.monic())) {
            pieces.emplace_back(part, multiplicity * exponent);
        }
    }
    out.factors_ = refine(std::move(pieces));
    return out;
}

RatFunc RatFunc::constant(const Rational& c)
{
    return from_factors(c, {});
}

RatFunc RatFunc::parse(std::string_view text)
{
    return from_factors(1, parse_product(text));
}

int RatFunc::degree() const
{
    int d = 0;
    for (const auto& [poly, e] : factors_) {
        d += e * poly.degree();
    }
    return d;
}

RatFunc RatFunc::to_infinity_chart() const
{
    // pi(1/s) = s^(-deg pi) * rev(pi)(s); rev(pi) has constant term 1.
    std::vector<Factor> pieces;
    for (const auto& [poly, e] : factors_) {
        pieces.emplace_back(poly.reversed(), e);
    }
    const int d = degree();
    if (d != 0) {
        pieces.emplace_back(Poly::variable(), -d);
    }
    return from_factors(constant_, pieces);
}

Rational RatFunc::eval(const Rational& t) const
{
    Rational acc = constant_;
    for (const auto& [poly, e] : factors_) {
        const Rational v = poly.eval(t);
        if (v == 0) {
            throw Error(ErrorKind::ZeroInput, "rational function evaluated at a zero or pole");
        }
        acc *= rational_pow(v, e);
    }
    return acc;
}

std::string RatFunc::to_string() const
{
    std::ostringstream out;
    out << constant_.get_str();
    for (const auto& [poly, e] : factors_) {
        out << " * (" << poly.to_string() << ")";
        if (e != 1) {
            out << "^" << e;
        }
    }
    return out.str();
}

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    std::vector<RatFunc::Factor> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    RatFunc out;
    out.constant_ = a.constant_ * b.constant_;
    out.factors_ = refine(std::move(all));
    return out;
}

RatFunc RatFunc::pow(int exponent) const
{
    RatFunc out;
    out.constant_ = rational_pow(constant_, exponent);
    for (const auto& [poly, e] : factors_) {
        if (exponent != 0) {
            out.factors_.emplace_back(poly, e * exponent);
        }
    }
    return out;
}

std::vector<Poly> coprime_base(const std::vector<Poly>& polys)
{
    std::vector<RatFunc::Factor> pieces;
    for (const auto& p : polys) {
        if (p.degree() > 0) {
            for (const auto& [part, mult] : squarefree_decomposition(p)) {
                (void)mult;
                pieces.emplace_back(part, 1);
            }
        }
    }
    std::vector<Poly> out;
    for (auto& [poly, e] : refine(std::move(pieces))) {
        (void)e;
        out.push_back(std::move(poly));
    }
    return out;
}

namespace {

struct SplitAtPlace {
    int valuation = 0;
    Rational constant;
    std::vector<RatFunc::Factor> rest;  // factors with the place removed
};

SplitAtPlace split_at(const RatFunc& f, const Poly& pi)
{
    SplitAtPlace out{0, f.constant_factor(), {}};
    for (const auto& [beta, e] : f.factors()) {
        const Poly g = gcd(pi, beta);
        if (g.degree() < 1) {
            out.rest.emplace_back(beta, e);
            continue;
        }
        if (g != pi) {
            throw Error(ErrorKind::PreconditionViolated,
                        "place " + pi.to_string() + " meets factor " + beta.to_string() + " only partially");
        }
        out.valuation += e;
        const Poly cofactor = divmod(beta, pi).first;
        if (cofactor.degree() > 0) {
            out.rest.emplace_back(cofactor, e);
        }
    }
    return out;
}

/// Res(pi, c * prod beta^e) for monic pi.
Rational resultant_with(const Poly& pi, const SplitAtPlace& part)
{
    Rational acc = rational_pow(part.constant, pi.degree());
    for (const auto& [beta, e] : part.rest) {
        acc *= rational_pow(resultant(pi, beta), e);
    }
    return acc;
}

Rational finite_norm(const RatFunc& f, const RatFunc& g, const Poly& pi)
{
    const SplitAtPlace sf = split_at(f, pi);
    const SplitAtPlace sg = split_at(g, pi);
    const long v = sf.valuation;
    const long w = sg.valuation;
    const long n = pi.degree();
    Rational out = ((n * v * w) % 2 == 0) ? Rational(1) : Rational(-1);
    if (w != 0) {
        out *= rational_pow(resultant_with(pi, sf), w);
    }
    if (v != 0) {
        out *= rational_pow(resultant_with(pi, sg), -v);
    }
    return out;
}

}  // namespace

int valuation_at(const RatFunc& f, const Place& x)
{
    if (x.is_infinity()) {
        return -f.degree();
    }
    return split_at(f, x.poly->monic()).valuation;
}

Rational norm_of_tame_symbol(const RatFunc& f, const RatFunc& g, const Place& x)
{
    if (x.is_infinity()) {
        return finite_norm(f.to_infinity_chart(), g.to_infinity_chart(), Poly::variable());
    }
    return finite_norm(f, g, x.poly->monic());
}

WeilReport weil_check(const RatFunc& f, const RatFunc& g)
{
    std::vector<Poly> support;
    for (const auto& [poly, e] : f.factors()) {
        support.push_back(poly);
    }
    for (const auto& [poly, e] : g.factors()) {
        support.push_back(poly);
    }
    WeilReport report;
    report.product = 1;
    for (const auto& pi : coprime_base(support)) {
        const Place place = Place::finite(pi);
        const Rational value = norm_of_tame_symbol(f, g, place);
        report.product *= value;
        report.per_point.push_back({place, value});
    }
    const Rational at_infinity = norm_of_tame_symbol(f, g, Place::infinity());
    report.product *= at_infinity;
    report.per_point.push_back({Place::infinity(), at_infinity});
    report.ok = report.product == 1;
    return report;
}

// ---------------------------------------------------------------------------
// Local symbols

std::uint64_t tame_symbol_log(const UnitCoordinates& a, const UnitCoordinates& b, const ClosedPoint& x)
{
    const auto n = static_cast<std::int64_t>(x.tame_order());
    if (n == 1) {
        return 0;
    }
    const std::int64_t log_minus_one = x.residue_order() % 2 == 1 ? n / 2 : 0;
    const std::int64_t v = mod(a.valuation, n);
    const std::int64_t w = mod(b.valuation, n);
    const auto mulmod = [n](std::int64_t s, std::int64_t t) {
        return static_cast<std::int64_t>((static_cast<__int128>(s) * t) % n);
    };
    std::int64_t acc = mulmod(mulmod(v, w), log_minus_one);
    acc = (acc + mulmod(w, static_cast<std::int64_t>(a.residue_log % static_cast<std::uint64_t>(n)))) % n;
    acc = mod(acc - mulmod(v, static_cast<std::int64_t>(b.residue_log % static_cast<std::uint64_t>(n))), n);
    return static_cast<std::uint64_t>(acc);
}

std::int64_t tame_hilbert(const Rational& a, const Rational& b, const ClosedPoint& x, std::int64_t m)
{
    if (a == 0 || b == 0) {
        throw Error(ErrorKind::ZeroInput, "Hilbert symbol of zero");
    }
    require_modulus_prime_to_p(m, x.prime());
    const std::uint64_t log = tame_symbol_log(unit_coordinates(a, x), unit_coordinates(b, x), x);
    return static_cast<std::int64_t>(log % static_cast<std::uint64_t>(x.tame_modulus(m)));
}

FinAbGroup k2_mod_m(const ClosedPoint& x, std::int64_t m)
{
    require_modulus_prime_to_p(m, x.prime());
    return FinAbGroup::cyclic(static_cast<long>(x.tame_modulus(m)));
}

namespace {

/// log_G of the canonical generator g of F_p inside F_q.
std::uint64_t base_generator_log(const ClosedPoint& x)
{
    const FqField base = FqField::make(x.prime(), 1);
    const auto g = static_cast<std::int64_t>(base.generator().coeffs[0]);
    const FqField& field = x.residue_field();
    return field.dlog(field.from_integer(g));
}

AbHom base_to_point(const ClosedPoint& x, std::int64_t m, bool with_ramification)
{
    require_modulus_prime_to_p(m, x.prime());
    const std::int64_t d0 = gcd(m, x.prime() - 1);
    const std::int64_t dx = x.tame_modulus(m);
    std::uint64_t image = base_generator_log(x) % static_cast<std::uint64_t>(dx);
    if (with_ramification) {
        image = (image * static_cast<std::uint64_t>(x.ramification_index())) % static_cast<std::uint64_t>(dx);
    }
    return cyclic_hom(static_cast<long>(d0), static_cast<long>(dx), static_cast<unsigned long>(image));
}

}  // namespace

AbHom k2_base_to_point(const ClosedPoint& x, std::int64_t m)
{
    return base_to_point(x, m, true);
}

AbHom mu_base_to_point(const ClosedPoint& x, std::int64_t m)
{
    return base_to_point(x, m, false);
}

AbHom mu_restriction_to_point(const ClosedPoint& x, std::int64_t m)
{
    return base_to_point(x, m, true);
}

AbHom hilbert_iso_at_point(const ClosedPoint& x, std::int64_t m)
{
    require_modulus_prime_to_p(m, x.prime());
    const std::int64_t d = x.tame_modulus(m);
    // {teichmuller(G), uniformizer}: a unit with residue log 1 against an
    // element of valuation 1.
    const UnitCoordinates zeta{0, 1};
    const UnitCoordinates uniformizer{1, 0};
    const auto derived = static_cast<std::int64_t>(tame_symbol_log(zeta, uniformizer, x)) % d;
    if (derived != 1 % d) {
        throw Error(ErrorKind::InternalInconsistency,
                    "Hilbert symbol of the K_2 generator at " + x.to_string() + " is " + std::to_string(derived));
    }
    if (x.kind() == PointKind::Rational && d > 1) {
        // Here G and the uniformizer p are themselves rational numbers.
        const auto g = static_cast<long>(x.residue_field().generator().coeffs[0]);
        const std::int64_t direct = tame_hilbert(Rational(g), Rational(x.prime()), x, m);
        if (direct != 1) {
            throw Error(ErrorKind::InternalInconsistency,
                        "tame_hilbert(G, p) at " + x.to_string() + " is " + std::to_string(direct));
        }
    }
    return cyclic_hom(static_cast<long>(d), static_cast<long>(d), 1);
}

AbHom local_reciprocity_base(std::int64_t p, std::int64_t m)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    require_modulus_prime_to_p(m, p);
    const GroupPresentation side = GroupPresentation::direct_sum(
        {GroupPresentation::cyclic(static_cast<long>(m)), GroupPresentation::cyclic(static_cast<long>(gcd(m, p - 1)))});
    return AbHom(side, side, IntMatrix::identity(2));
}

bool hilbert_pairing_is_perfect(std::int64_t p, std::int64_t d)
{
    if (d < 1 || (p - 1) % d != 0) {
        throw Error(ErrorKind::PreconditionViolated, "d must divide p - 1");
    }
    const ClosedPoint base = base_point(p);
    const auto g = static_cast<long>(base.residue_field().generator().coeffs[0]);
    // Representatives p^i g^j of Q_p^x / d, indexed i * d + j.
    std::vector<Rational> reps;
    for (std::int64_t i = 0; i < d; ++i) {
        for (std::int64_t j = 0; j < d; ++j) {
            reps.push_back(rational_pow(Rational(p), static_cast<long>(i)) * rational_pow(Rational(g), static_cast<long>(j)));
        }
    }
    const std::size_t n = reps.size();
    std::vector<std::int64_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            table[a * n + b] = tame_hilbert(reps[a], reps[b], base, d);
        }
    }
    for (std::size_t a = 1; a < n; ++a) {
        bool left = false;
        bool right = false;
        for (std::size_t b = 0; b < n; ++b) {
            left = left || table[a * n + b] != 0;
            right = right || table[b * n + a] != 0;
        }
        if (!left || !right) {
            return false;
        }
    }
    return true;
}

}  // namespace tamecft

#include "tamecft/tame_cft.hpp"

#include "tamecft/error.hpp"
#include "tamecft/milnor.hpp"

namespace tamecft {

Instance::Instance(std::int64_t p, std::int64_t m, std::vector<ClosedPoint> points)
    : p_(p), m_(m), points_(std::move(points))
{
}

Instance Instance::make(std::int64_t p, std::int64_t m, std::vector<ClosedPoint> points)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidInstance, std::to_string(p) + " is not prime");
    }
    if (m < 2 || gcd(m, p) != 1) {
        throw Error(ErrorKind::InvalidInstance, "modulus must be prime to p and at least 2");
    }
    bool has_infinity = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].prime() != p) {
            throw Error(ErrorKind::InvalidInstance, "point " + points[i].to_string() + " was classified at another prime");
        }
        has_infinity = has_infinity || points[i].is_infinity();
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i].place() == points[j].place()) {
                throw Error(ErrorKind::InvalidInstance, "point " + points[i].to_string() + " listed twice");
            }
        }
    }
    if (!has_infinity) {
        throw Error(ErrorKind::InvalidInstance, "S must contain infinity");
    }
    return Instance(p, m, std::move(points));
}

Instance Instance::make(std::int64_t p, std::int64_t m, const std::vector<std::string>& points)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidInstance, std::to_string(p) + " is not prime");
    }
    if (m < 2 || gcd(m, p) != 1) {
        throw Error(ErrorKind::InvalidInstance, "modulus must be prime to p and at least 2");
    }
    std::vector<ClosedPoint> classified;
    for (const auto& text : points) {
        try {
            classified.push_back(classify_point(text, p));
        } catch (const Error& e) {
            throw Error(ErrorKind::InvalidInstance, "point \"" + text + "\": " + e.what());
        }
    }
    return make(p, m, std::move(classified));
}

Instance Instance::with_point(const ClosedPoint& x) const
{
    std::vector<ClosedPoint> points = points_;
    points.push_back(x);
    return make(p_, m_, std::move(points));
}

namespace {

/// Cokernel presentation of Z/source_order -> sum_x Z/order_x, 1 -> (images).
GroupPresentation row_cokernel(const std::vector<Integer>& orders, const std::vector<Integer>& images)
{
    const std::size_t n = orders.size();
    IntMatrix relations(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        relations(i, i) = orders[i];
        relations(i, n) = images[i];
    }
    return {n, relations};
}

struct Row {
    std::vector<Integer> orders;
    std::vector<Integer> images;
    Integer source_order;
};

Row full_mu_row(const Instance& inst, bool with_ramification)
{
    // Full tame orders: use a modulus divisible by every q - 1 and prime to p.
    std::int64_t l = inst.prime() - 1;
    for (const auto& x : inst.points()) {
        const auto n = static_cast<std::int64_t>(x.tame_order());
        l = l / gcd(l, n) * n;
    }
    Row row;
    row.source_order = static_cast<long>(inst.prime() - 1);
    for (const auto& x : inst.points()) {
        // l = 1 (p = 2 and nothing but rational points) is not a valid modulus;
        // every tame group is then trivial anyway.
        const std::int64_t m = l > 1 ? l : 1;
        const AbHom h = with_ramification ? mu_restriction_to_point(x, m) : mu_base_to_point(x, m);
        row.orders.emplace_back(static_cast<unsigned long>(x.tame_order()));
        row.images.push_back(h.matrix()(0, 0));
    }
    return row;
}

Row mod_m_row(const Instance& inst, bool k2_side)
{
    Row row;
    row.source_order = static_cast<long>(gcd(inst.modulus(), inst.prime() - 1));
    for (const auto& x : inst.points()) {
        const AbHom h = k2_side ? k2_base_to_point(x, inst.modulus()) : mu_restriction_to_point(x, inst.modulus());
        row.orders.push_back(h.target().relations(0, 0));
        row.images.push_back(h.matrix()(0, 0));
    }
    return row;
}

}  // namespace

JtResult jt_group(const Instance& inst)
{
    JtResult out;
    const Row row = full_mu_row(inst, true);
    out.group = row_cokernel(row.orders, row.images).group();
    const Row inclusion = full_mu_row(inst, false);
    out.inclusion_row_agrees = row_cokernel(inclusion.orders, inclusion.images).group() == out.group;
    for (const auto& x : inst.points()) {
        out.prime_to_p_only = out.prime_to_p_only || x.wild_possible();
    }
    const Integer order = out.group.order();
    const Integer p = static_cast<long>(inst.prime());
    out.order_prime_to_p = out.group.is_finite() && !mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t());
    return out;
}

GroupPresentation et_presentation(const Instance& inst)
{
    const Row row = mod_m_row(inst, true);
    return row_cokernel(row.orders, row.images);
}

GroupPresentation jt_mod_m_presentation(const Instance& inst)
{
    const Row row = mod_m_row(inst, false);
    return row_cokernel(row.orders, row.images);
}

FinAbGroup et_group_mod_m(const Instance& inst)
{
    return et_presentation(inst).group();
}

Gr1Result gr1_reciprocity(const Instance& inst)
{
    const std::size_t n = inst.points().size();
    IntMatrix blocks(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        blocks(i, i) = hilbert_iso_at_point(inst.points()[i], inst.modulus()).matrix()(0, 0);
    }
    try {
        AbHom map(et_presentation(inst), jt_mod_m_presentation(inst), blocks);
        const Verdict verdict{is_surjective(map), is_injective(map)};
        return {std::move(map), verdict};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::PreconditionViolated) {
            throw Error(ErrorKind::NonCommutingSquare,
                        "Hilbert symbols do not induce a map on cokernels: " + std::string(e.what()));
        }
        throw;
    }
}

std::vector<SquareCheck> hilbert_square_details(const Instance& inst)
{
    const std::int64_t p = inst.prime();
    const std::int64_t m = inst.modulus();
    const ClosedPoint base = base_point(p);
    const AbHom base_hilbert = hilbert_iso_at_point(base, m);
    const auto g = static_cast<long>(base.residue_field().generator().coeffs[0]);

    std::vector<SquareCheck> out;
    for (const auto& x : inst.points()) {
        const AbHom top = compose(hilbert_iso_at_point(x, m), k2_base_to_point(x, m));
        const AbHom bottom = compose(mu_restriction_to_point(x, m), base_hilbert);
        const std::int64_t d = x.tame_modulus(m);
        SquareCheck check{x, 0, 0, 0, false};
        check.via_k2 = mod(top.matrix()(0, 0), d);
        check.via_mu = mod(bottom.matrix()(0, 0), d);
        // {g, p} pulled back to k(x), evaluated straight from the symbol formula.
        check.direct = tame_hilbert(Rational(g), Rational(p), x, m);
        check.commutes = top.same_map(bottom) && check.direct == check.via_k2;
        out.push_back(std::move(check));
    }
    return out;
}

bool check_hilbert_square(const Instance& inst)
{
    for (const auto& c : hilbert_square_details(inst)) {
        if (!c.commutes) {
            return false;
        }
    }
    return true;
}

Gr0Result gr0_reciprocity(const Instance& inst)
{
    AbHom map = local_reciprocity_base(inst.prime(), inst.modulus());
    const Verdict verdict{is_surjective(map), is_injective(map)};
    const FinAbGroup coker = cokernel(map);
    return {std::move(map), verdict, coker.order()};
}

}  // namespace tamecft

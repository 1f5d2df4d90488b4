#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamecft/abgroup.hpp"
#include "tamecft/local_field.hpp"

namespace tamecft {

/// X = P^1_{Q_p} - S with a coefficient modulus m prime to p. S contains
/// infinity; its points are pairwise distinct and of supported kinds.
class Instance {
public:
    static Instance make(std::int64_t p, std::int64_t m, const std::vector<std::string>& points);
    static Instance make(std::int64_t p, std::int64_t m, std::vector<ClosedPoint> points);

    std::int64_t prime() const { return p_; }
    std::int64_t modulus() const { return m_; }
    const std::vector<ClosedPoint>& points() const { return points_; }

    /// Same S with another point appended (validated).
    Instance with_point(const ClosedPoint& x) const;

private:
    Instance(std::int64_t p, std::int64_t m, std::vector<ClosedPoint> points);

    std::int64_t p_;
    std::int64_t m_;
    std::vector<ClosedPoint> points_;
};

struct JtResult {
    FinAbGroup group;  // J^t(X), prime-to-p part
    /// Some point may carry wild roots of unity; only the prime-to-p part
    /// was computed.
    bool prime_to_p_only = false;
    bool order_prime_to_p = false;
    /// The cokernel of the plain inclusion of roots of unity has the same
    /// invariant factors as the Hilbert-compatible row used for J^t.
    bool inclusion_row_agrees = false;
};

/// cokernel of mu(Q_p) -> sum_{x in S} mu(k(x)) at full tame orders.
JtResult jt_group(const Instance& inst);

/// cokernel of K_2(Q_p)/m -> sum_{x in S} K_2(k(x))/m.
FinAbGroup et_group_mod_m(const Instance& inst);

/// Cokernel presentations of both rows of the comparison diagram mod m.
GroupPresentation et_presentation(const Instance& inst);
GroupPresentation jt_mod_m_presentation(const Instance& inst);

struct Verdict {
    bool surjective = false;
    bool injective = false;
    bool isomorphism() const { return surjective && injective; }
};

struct Gr1Result {
    AbHom map;  // E^t(X)/m -> J^t(X)/m
    Verdict verdict;
};

/// Map induced on cokernels by the per-point Hilbert symbols. Raises
/// NonCommutingSquare if it is not well defined.
Gr1Result gr1_reciprocity(const Instance& inst);

struct SquareCheck {
    ClosedPoint point;
    std::int64_t via_k2 = 0;      // Hilbert_x(pull-back of {g, p})
    std::int64_t via_mu = 0;      // mu-map(Hilbert_base({g, p}))
    std::int64_t direct = 0;      // tame_hilbert(g, p) evaluated at x
    bool commutes = false;
};

/// Per-point commutativity of Hilbert symbols against the two base-to-point
/// rows, checked along three routes.
std::vector<SquareCheck> hilbert_square_details(const Instance& inst);
bool check_hilbert_square(const Instance& inst);

struct Gr0Result {
    AbHom map;  // Q_p^x/m -> G_k/m
    Verdict verdict;
    Integer graded_cokernel_order;
};

Gr0Result gr0_reciprocity(const Instance& inst);

}  // namespace tamecft

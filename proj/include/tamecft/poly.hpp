#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamecft/exactnum.hpp"

namespace tamecft {

/// Univariate polynomial in t over Q. Coefficients are stored lowest degree
/// first and trailing zeros are always trimmed, so equal polynomials compare
/// equal.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);

    static Poly constant(const Rational& c);
    static Poly variable();
    /// t - root
    static Poly linear(const Rational& root);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;
    /// t^n f(1/t), n = deg f.
    Poly reversed() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

    bool operator==(const Poly&) const = default;

    /// Rendering in the t-grammar accepted by parse_poly, e.g. "t^2+2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

Poly pow(const Poly& base, unsigned exponent);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with
/// f = prod s_i^i, each s_i monic, squarefree, nonconstant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Sylvester resultant. Res(f, g) = lc(f)^deg g * prod g(alpha) over roots of f.
Rational resultant(const Poly& f, const Poly& g);

/// Determinant of a square integer matrix (row-major) by fraction-free
/// Bareiss elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> rows);

/// Parses the polynomial grammar: t, integers, rationals a/b, +, -, *, ^ with
/// nonnegative integer exponents, and parentheses.
Poly parse_poly(std::string_view text);

/// A top-level product of factors: c * (poly)^e * ... Exponents may be
/// negative. A bare sum such as "t-1" is a single factor with exponent 1.
std::vector<std::pair<Poly, int>> parse_product(std::string_view text);

}  // namespace tamecft

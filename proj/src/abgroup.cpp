#include "tamecft/abgroup.hpp"

#include <algorithm>
#include <sstream>

#include "tamecft/error.hpp"

namespace tamecft {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::PreconditionViolated, "ragged matrix literal");
        }
        for (long v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries, std::size_t rows, std::size_t cols)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size() && i < rows && i < cols; ++i) {
        m(i, i) = entries[i];
    }
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const
{
    std::vector<Integer> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back((*this)(r, c));
    }
    return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& other) const
{
    if (other.rows_ != rows_) {
        throw Error(ErrorKind::PreconditionViolated, "hconcat row mismatch");
    }
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(r, c) = (*this)(r, c);
        }
        for (std::size_t c = 0; c < other.cols_; ++c) {
            out(r, cols_ + c) = other(r, c);
        }
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw Error(ErrorKind::PreconditionViolated, "matrix product dimension mismatch");
    }
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntMatrix::determinant() const
{
    if (rows_ != cols_) {
        throw Error(ErrorKind::PreconditionViolated, "determinant of a non-square matrix");
    }
    // Fraction-free elimination, same scheme as the resultant code.
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m[r][c] = (*this)(r, c);
        }
    }
    if (rows_ == 0) {
        return 1;
    }
    Integer sign = 1;
    Integer prev = 1;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct SmithWork {
    IntMatrix A;
    IntMatrix U;
    IntMatrix V;

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) {
            return;
        }
        for (std::size_t c = 0; c < A.cols(); ++c) {
            std::swap(A(i, c), A(j, c));
        }
        for (std::size_t c = 0; c < U.cols(); ++c) {
            std::swap(U(i, c), U(j, c));
        }
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) {
            return;
        }
        for (std::size_t r = 0; r < A.rows(); ++r) {
            std::swap(A(r, i), A(r, j));
        }
        for (std::size_t r = 0; r < V.rows(); ++r) {
            std::swap(V(r, i), V(r, j));
        }
    }

    // row_dst += k * row_src
    void add_row(std::size_t dst, std::size_t src, const Integer& k)
    {
        for (std::size_t c = 0; c < A.cols(); ++c) {
            A(dst, c) += k * A(src, c);
        }
        for (std::size_t c = 0; c < U.cols(); ++c) {
            U(dst, c) += k * U(src, c);
        }
    }

    // col_dst += k * col_src
    void add_col(std::size_t dst, std::size_t src, const Integer& k)
    {
        for (std::size_t r = 0; r < A.rows(); ++r) {
            A(r, dst) += k * A(r, src);
        }
        for (std::size_t r = 0; r < V.rows(); ++r) {
            V(r, dst) += k * V(r, src);
        }
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < A.cols(); ++c) {
            A(i, c) = -A(i, c);
        }
        for (std::size_t c = 0; c < U.cols(); ++c) {
            U(i, c) = -U(i, c);
        }
    }
};

Integer abs_of(const Integer& x)
{
    return x < 0 ? Integer(-x) : x;
}

// Quotient rounding toward the nearest integer keeps remainders at most half
// the pivot in absolute value.
Integer nearest_quotient(const Integer& a, const Integer& b)
{
    Integer q;
    Integer twice_a = 2 * a + b;
    Integer twice_b = 2 * b;
    mpz_fdiv_q(q.get_mpz_t(), twice_a.get_mpz_t(), twice_b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M)
{
    SmithWork w{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
    const std::size_t rows = M.rows();
    const std::size_t cols = M.cols();
    std::size_t t = 0;
    for (; t < std::min(rows, cols); ++t) {
        // Least nonzero |entry| of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pr = t;
        std::size_t pc = t;
        Integer best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                const Integer& v = w.A(i, j);
                if (v != 0 && (!found || abs_of(v) < best)) {
                    found = true;
                    best = abs_of(v);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (!found) {
            break;
        }
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.A(i, t) != 0) {
                    w.add_row(i, t, -nearest_quotient(w.A(i, t), w.A(t, t)));
                    clean = clean && w.A(i, t) == 0;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.A(t, j) != 0) {
                    w.add_col(j, t, -nearest_quotient(w.A(t, j), w.A(t, t)));
                    clean = clean && w.A(t, j) == 0;
                }
            }
            if (!clean) {
                // Move the smallest leftover in row/column t onto the pivot.
                std::size_t bi = t;
                std::size_t bj = t;
                Integer b = abs_of(w.A(t, t));
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (w.A(i, t) != 0 && abs_of(w.A(i, t)) < b) {
                        b = abs_of(w.A(i, t));
                        bi = i;
                        bj = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (w.A(t, j) != 0 && abs_of(w.A(t, j)) < b) {
                        b = abs_of(w.A(t, j));
                        bi = t;
                        bj = j;
                    }
                }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(w.A(i, j).get_mpz_t(), w.A(t, t).get_mpz_t())) {
                        w.add_row(t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (w.A(t, t) < 0) {
            w.negate_row(t);
        }
    }
    return SmithForm{std::move(w.U), std::move(w.A), std::move(w.V), t};
}

namespace {

std::vector<Integer> mat_vec(const IntMatrix& m, const std::vector<Integer>& v)
{
    std::vector<Integer> out(m.rows(), Integer(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

/// Coordinates of v in the lattice basis U^{-1}(d_i e_i) read off a Smith
/// form of the generators; empty optional-like flag when v is outside.
bool smith_coordinates(const SmithForm& s, const std::vector<Integer>& v, std::vector<Integer>* coords)
{
    const std::vector<Integer> y = mat_vec(s.U, v);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t())) {
                return false;
            }
            if (coords != nullptr) {
                Integer q;
                mpz_divexact(q.get_mpz_t(), y[i].get_mpz_t(), s.D(i, i).get_mpz_t());
                coords->push_back(q);
            }
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

/// span(lattice) / span(sub) for sub contained in lattice; both given as
/// column generators in the same ambient Z^n.
FinAbGroup lattice_quotient(const IntMatrix& lattice, const IntMatrix& sub)
{
    const SmithForm s = smith_normal_form(lattice);
    IntMatrix coords(s.rank, sub.cols());
    for (std::size_t c = 0; c < sub.cols(); ++c) {
        std::vector<Integer> x;
        if (!smith_coordinates(s, sub.column(c), &x)) {
            throw Error(ErrorKind::InternalInconsistency, "sublattice not contained in lattice");
        }
        for (std::size_t r = 0; r < s.rank; ++r) {
            coords(r, c) = x[r];
        }
    }
    return GroupPresentation{s.rank, coords}.group();
}

}  // namespace

bool in_column_span(const std::vector<Integer>& v, const IntMatrix& generators)
{
    if (v.size() != generators.rows()) {
        throw Error(ErrorKind::PreconditionViolated, "vector/lattice dimension mismatch");
    }
    return smith_coordinates(smith_normal_form(generators), v, nullptr);
}

// ---------------------------------------------------------------------------
// Groups

FinAbGroup FinAbGroup::cyclic(const Integer& order)
{
    return from_cyclic_orders({order});
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Integer>& orders)
{
    std::vector<Integer> diag;
    for (const auto& o : orders) {
        diag.push_back(abs_of(o));
    }
    GroupPresentation p{orders.size(), IntMatrix::diagonal(diag, orders.size(), orders.size())};
    return p.group();
}

Integer FinAbGroup::order() const
{
    Integer n = 1;
    for (const auto& d : factors) {
        n *= d;
    }
    return n;
}

FinAbGroup FinAbGroup::mod(const Integer& m) const
{
    std::vector<Integer> orders(free_rank, m);
    for (const auto& d : factors) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        orders.push_back(g);
    }
    return from_cyclic_orders(orders);
}

std::string FinAbGroup::to_string() const
{
    if (is_trivial()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) {
            out << "^" << free_rank;
        }
        first = false;
    }
    for (const auto& d : factors) {
        out << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return out.str();
}

GroupPresentation GroupPresentation::of(const FinAbGroup& g)
{
    const std::size_t n = g.free_rank + g.factors.size();
    std::vector<Integer> diag(g.free_rank, Integer(0));
    diag.insert(diag.end(), g.factors.begin(), g.factors.end());
    return {n, IntMatrix::diagonal(diag, n, n)};
}

GroupPresentation GroupPresentation::cyclic(const Integer& order)
{
    IntMatrix rel(1, 1);
    rel(0, 0) = order;
    return {1, rel};
}

GroupPresentation GroupPresentation::direct_sum(const std::vector<GroupPresentation>& parts)
{
    std::size_t gens = 0;
    std::size_t rels = 0;
    for (const auto& p : parts) {
        gens += p.generators;
        rels += p.relations.cols();
    }
    IntMatrix m(gens, rels);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.generators; ++r) {
            for (std::size_t c = 0; c < p.relations.cols(); ++c) {
                m(r0 + r, c0 + c) = p.relations(r, c);
            }
        }
        r0 += p.generators;
        c0 += p.relations.cols();
    }
    return {gens, m};
}

FinAbGroup GroupPresentation::group() const
{
    if (relations.rows() != generators) {
        throw Error(ErrorKind::PreconditionViolated, "relation matrix row count must equal generator count");
    }
    const SmithForm s = smith_normal_form(relations);
    FinAbGroup g;
    g.free_rank = generators - s.rank;
    for (std::size_t i = 0; i < s.rank; ++i) {
        if (s.D(i, i) != 1) {
            g.factors.push_back(s.D(i, i));
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Homomorphisms

AbHom::AbHom(GroupPresentation source, GroupPresentation target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.generators || matrix_.cols() != source_.generators) {
        throw Error(ErrorKind::PreconditionViolated, "homomorphism matrix has the wrong shape");
    }
    if (source_.relations.rows() != source_.generators || target_.relations.rows() != target_.generators) {
        throw Error(ErrorKind::PreconditionViolated, "malformed presentation");
    }
    const IntMatrix images = matrix_ * source_.relations;
    if (images.cols() == 0) {
        return;
    }
    const SmithForm s = smith_normal_form(target_.relations);
    for (std::size_t c = 0; c < images.cols(); ++c) {
        if (!smith_coordinates(s, images.column(c), nullptr)) {
            throw Error(ErrorKind::PreconditionViolated,
                        "matrix does not respect relations (map not well defined)");
        }
    }
}

AbHom::AbHom(const FinAbGroup& source, const FinAbGroup& target, IntMatrix matrix)
    : AbHom(GroupPresentation::of(source), GroupPresentation::of(target), std::move(matrix))
{
}

AbHom AbHom::identity(const GroupPresentation& g)
{
    return AbHom(g, g, IntMatrix::identity(g.generators));
}

std::vector<Integer> AbHom::apply(const std::vector<Integer>& x) const
{
    if (x.size() != source_.generators) {
        throw Error(ErrorKind::PreconditionViolated, "source vector has the wrong length");
    }
    return mat_vec(matrix_, x);
}

bool AbHom::same_map(const AbHom& other) const
{
    if (other.source_.generators != source_.generators || other.target_.generators != target_.generators) {
        return false;
    }
    const SmithForm s = smith_normal_form(target_.relations);
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        std::vector<Integer> diff(matrix_.rows());
        for (std::size_t r = 0; r < matrix_.rows(); ++r) {
            diff[r] = matrix_(r, c) - other.matrix_(r, c);
        }
        if (!smith_coordinates(s, diff, nullptr)) {
            return false;
        }
    }
    return true;
}

AbHom compose(const AbHom& after, const AbHom& before)
{
    if (after.source().generators != before.target().generators) {
        throw Error(ErrorKind::PreconditionViolated, "composition of incompatible homomorphisms");
    }
    return AbHom(before.source(), after.target(), after.matrix() * before.matrix());
}

FinAbGroup cokernel(const AbHom& h)
{
    return GroupPresentation{h.target().generators, h.matrix().hconcat(h.target().relations)}.group();
}

FinAbGroup kernel(const AbHom& h)
{
    // x is in the kernel iff A x = R_t y for some y: project the integer
    // kernel of [A | -R_t] onto the source coordinates.
    const std::size_t ns = h.source().generators;
    IntMatrix neg_rt = h.target().relations;
    for (std::size_t r = 0; r < neg_rt.rows(); ++r) {
        for (std::size_t c = 0; c < neg_rt.cols(); ++c) {
            neg_rt(r, c) = -neg_rt(r, c);
        }
    }
    const IntMatrix stacked = h.matrix().hconcat(neg_rt);
    const SmithForm s = smith_normal_form(stacked);
    const std::size_t nullity = stacked.cols() - s.rank;
    IntMatrix lattice(ns, nullity);
    for (std::size_t k = 0; k < nullity; ++k) {
        for (std::size_t r = 0; r < ns; ++r) {
            lattice(r, k) = s.V(r, s.rank + k);
        }
    }
    return lattice_quotient(lattice, h.source().relations);
}

FinAbGroup image(const AbHom& h)
{
    return lattice_quotient(h.matrix().hconcat(h.target().relations), h.target().relations);
}

bool is_surjective(const AbHom& h)
{
    return cokernel(h).is_trivial();
}

bool is_injective(const AbHom& h)
{
    return kernel(h).is_trivial();
}

bool is_isomorphism(const AbHom& h)
{
    return is_injective(h) && is_surjective(h);
}

AbHom cyclic_hom(const Integer& source_order, const Integer& target_order, const Integer& image)
{
    IntMatrix m(1, 1);
    m(0, 0) = image;
    return AbHom(GroupPresentation::cyclic(source_order), GroupPresentation::cyclic(target_order), m);
}

}  // namespace tamecft

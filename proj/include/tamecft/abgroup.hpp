#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamecft/exactnum.hpp"

namespace tamecft {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Integer>& entries, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> column(std::size_t c) const;
    /// [this | other], same row count.
    IntMatrix hconcat(const IntMatrix& other) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;
    Integer determinant() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal with d1 | d2 | ... (nonnegative)
    IntMatrix V;  // cols x cols, unimodular
    std::size_t rank = 0;
};

/// U * M * V = D. Pivots are chosen by least absolute value.
SmithForm smith_normal_form(const IntMatrix& M);

/// True if v lies in the Z-span of the columns of generators.
bool in_column_span(const std::vector<Integer>& v, const IntMatrix& generators);

/// Finitely generated abelian group in canonical invariant-factor form:
/// Z^free_rank + Z/d1 + ... + Z/dr with 2 <= d1 | d2 | ... | dr.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> factors;

    static FinAbGroup trivial() { return {}; }
    static FinAbGroup cyclic(const Integer& order);
    /// Canonicalises an arbitrary list of cyclic orders (0 meaning Z).
    static FinAbGroup from_cyclic_orders(const std::vector<Integer>& orders);

    bool is_trivial() const { return free_rank == 0 && factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of the torsion part (the whole group when finite).
    Integer order() const;
    /// G tensor Z/m.
    FinAbGroup mod(const Integer& m) const;

    std::string to_string() const;
    bool operator==(const FinAbGroup&) const = default;
};

/// Z^generators modulo the column span of relations.
struct GroupPresentation {
    std::size_t generators = 0;
    IntMatrix relations;  // generators x k

    static GroupPresentation of(const FinAbGroup& g);
    /// One generator with relation d (d = 1 presents the trivial group).
    static GroupPresentation cyclic(const Integer& order);
    static GroupPresentation direct_sum(const std::vector<GroupPresentation>& parts);

    FinAbGroup group() const;
};

/// Homomorphism between presented groups, given on generators. The
/// constructor rejects matrices that do not carry source relations into the
/// target relation lattice.
class AbHom {
public:
    AbHom(GroupPresentation source, GroupPresentation target, IntMatrix matrix);
    AbHom(const FinAbGroup& source, const FinAbGroup& target, IntMatrix matrix);

    static AbHom identity(const GroupPresentation& g);

    const GroupPresentation& source() const { return source_; }
    const GroupPresentation& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    FinAbGroup source_group() const { return source_.group(); }
    FinAbGroup target_group() const { return target_.group(); }

    /// Image of a source coordinate vector.
    std::vector<Integer> apply(const std::vector<Integer>& x) const;
    /// Equality as homomorphisms (matrices may differ by target relations).
    bool same_map(const AbHom& other) const;

private:
    GroupPresentation source_;
    GroupPresentation target_;
    IntMatrix matrix_;
};

/// after ∘ before
AbHom compose(const AbHom& after, const AbHom& before);

FinAbGroup cokernel(const AbHom& h);
FinAbGroup kernel(const AbHom& h);
FinAbGroup image(const AbHom& h);
bool is_surjective(const AbHom& h);
bool is_injective(const AbHom& h);
bool is_isomorphism(const AbHom& h);

/// Shorthand: Z/target_order <- Z/source_order, 1 -> image.
AbHom cyclic_hom(const Integer& source_order, const Integer& target_order, const Integer& image);

}  // namespace tamecft

#pragma once

// Two views of a poset representation. MatrixRep holds one block M(a) per
// element, all with d0 rows. SubspaceRep holds subspaces V(a) of k^n,
// order preserving. rho() maps the first to the second, lift() goes back.

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "posetrep/dimension.hpp"
#include "posetrep/matrix.hpp"
#include "posetrep/poset.hpp"
#include "posetrep/subspace.hpp"

namespace posetrep {

template <ExactField Field>
class MatrixRep {
public:
    MatrixRep(Poset poset, Field field, std::size_t d0, std::vector<Matrix<Field>> blocks)
        : poset_(std::move(poset)), field_(std::move(field)), d0_(d0), blocks_(std::move(blocks)) {
        if (blocks_.size() != poset_.size())
            throw Error(ErrorCode::InvalidInput, "representation needs one block per poset element");
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i].rows() != d0_)
                throw Error(ErrorCode::InvalidInput, "block '" + poset_.label(i) + "' does not have d0 rows");
            if (!(blocks_[i].field() == field_)) throw Error(ErrorCode::FieldMismatch, "block over a different field");
        }
    }

    /// All blocks with zero columns.
    static MatrixRep zero(const Poset& poset, const Field& field, std::size_t d0) {
        return MatrixRep(poset, field, d0, std::vector<Matrix<Field>>(poset.size(), Matrix<Field>(field, d0, 0)));
    }

    const Poset& poset() const { return poset_; }
    const Field& field() const { return field_; }
    std::size_t d0() const { return d0_; }
    const Matrix<Field>& block(std::size_t a) const { return blocks_.at(a); }
    const std::vector<Matrix<Field>>& blocks() const { return blocks_; }
    std::size_t columns(std::size_t a) const { return blocks_.at(a).cols(); }

    std::size_t total_columns() const {
        std::size_t c = 0;
        for (const auto& b : blocks_) c += b.cols();
        return c;
    }

    /// First global column of block a in full().
    std::size_t column_offset(std::size_t a) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a; ++i) c += blocks_[i].cols();
        return c;
    }

    /// [M(1) | M(2) | ... | M(n)]
    Matrix<Field> full() const {
        Matrix<Field> out(field_, d0_, total_columns());
        std::size_t c = 0;
        for (const auto& b : blocks_) {
            out.place(0, c, b);
            c += b.cols();
        }
        return out;
    }

    /// Blocks M(b), b in `elements`, side by side.
    Matrix<Field> stacked(const ElementSet& elements) const {
        Matrix<Field> out(field_, d0_, 0);
        for (auto b : elements) out = hstack(out, blocks_.at(b));
        return out;
    }

    /// El-level dimension: d0 rows, d(a) = number of columns of M(a).
    DimensionVector dimension() const {
        DimensionVector d{static_cast<std::int64_t>(d0_), {}};
        for (const auto& b : blocks_) d.values.push_back(static_cast<std::int64_t>(b.cols()));
        return d;
    }

    friend bool operator==(const MatrixRep& x, const MatrixRep& y) {
        return x.poset_ == y.poset_ && x.field_ == y.field_ && x.d0_ == y.d0_ && x.blocks_ == y.blocks_;
    }

private:
    Poset poset_;
    Field field_;
    std::size_t d0_;
    std::vector<Matrix<Field>> blocks_;
};

template <ExactField Field>
DimensionVector dimension_of(const MatrixRep<Field>& u) {
    return u.dimension();
}

template <ExactField Field>
class SubspaceRep {
public:
    /// Subspaces are given by spanning columns and stored in canonical form.
    /// Order preservation is not enforced here; see is_order_preserving().
    SubspaceRep(Poset poset, Field field, std::size_t ambient, std::vector<Matrix<Field>> spans)
        : poset_(std::move(poset)), field_(std::move(field)), ambient_(ambient) {
        if (spans.size() != poset_.size())
            throw Error(ErrorCode::InvalidInput, "representation needs one subspace per poset element");
        for (auto& s : spans) {
            if (s.rows() != ambient_) throw Error(ErrorCode::InvalidInput, "subspace in the wrong ambient space");
            subspaces_.push_back(canonical_column_basis(s));
        }
    }

    static SubspaceRep zero(const Poset& poset, const Field& field, std::size_t ambient) {
        return SubspaceRep(poset, field, ambient,
                           std::vector<Matrix<Field>>(poset.size(), Matrix<Field>(field, ambient, 0)));
    }

    const Poset& poset() const { return poset_; }
    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    const Matrix<Field>& subspace(std::size_t a) const { return subspaces_.at(a); }
    std::size_t dim(std::size_t a) const { return subspaces_.at(a).cols(); }

    /// Σ_{b≺a} V(b).
    Matrix<Field> lower_sum(std::size_t a) const {
        Matrix<Field> acc(field_, ambient_, 0);
        for (auto b : poset_.strict_lower_cone(a)) acc = hstack(acc, subspaces_[b]);
        return canonical_column_basis(acc);
    }

    /// d0 = dim V(0), d(a) = dim V(a) / Σ_{b≺a} V(b).
    DimensionVector dimension() const {
        DimensionVector d{static_cast<std::int64_t>(ambient_), {}};
        for (std::size_t a = 0; a < poset_.size(); ++a)
            d.values.push_back(static_cast<std::int64_t>(dim(a) - lower_sum(a).cols()));
        return d;
    }

    bool is_order_preserving() const {
        for (std::size_t a = 0; a < poset_.size(); ++a)
            for (std::size_t b = 0; b < poset_.size(); ++b)
                if (poset_.less(a, b) && !subspace::contains(subspaces_[b], subspaces_[a])) return false;
        return true;
    }

    /// Equal subspaces, element by element.
    friend bool operator==(const SubspaceRep& x, const SubspaceRep& y) {
        return x.poset_ == y.poset_ && x.field_ == y.field_ && x.ambient_ == y.ambient_ &&
               x.subspaces_ == y.subspaces_;
    }

private:
    Poset poset_;
    Field field_;
    std::size_t ambient_;
    std::vector<Matrix<Field>> subspaces_;
};

/// Validating constructor for external input.
template <ExactField Field>
SubspaceRep<Field> make_subspace_rep(Poset poset, Field field, std::size_t ambient, std::vector<Matrix<Field>> spans) {
    SubspaceRep<Field> v(std::move(poset), std::move(field), ambient, std::move(spans));
    if (!v.is_order_preserving()) throw Error(ErrorCode::InvalidInput, "subspace assignment is not order preserving");
    return v;
}

/// V(0) = k^{d0}, V(a) = column span of the blocks M(b), b ⪯ a.
template <ExactField Field>
SubspaceRep<Field> rho(const MatrixRep<Field>& u) {
    std::vector<Matrix<Field>> spans;
    for (std::size_t a = 0; a < u.poset().size(); ++a) spans.push_back(u.stacked(u.poset().lower_cone(a)));
    return SubspaceRep<Field>(u.poset(), u.field(), u.d0(), std::move(spans));
}

/// Block a spans a complement of Σ_{b≺a} V(b) inside V(a), picked greedily
/// from the canonical basis of V(a).
template <ExactField Field>
MatrixRep<Field> lift(const SubspaceRep<Field>& v) {
    std::vector<Matrix<Field>> blocks;
    for (std::size_t a = 0; a < v.poset().size(); ++a) {
        Matrix<Field> acc = v.lower_sum(a);
        std::size_t r = acc.cols();
        Matrix<Field> block(v.field(), v.ambient_dim(), 0);
        const Matrix<Field>& va = v.subspace(a);
        for (std::size_t j = 0; j < va.cols(); ++j) {
            Matrix<Field> col = va.column_range(j, 1);
            Matrix<Field> trial = hstack(acc, col);
            if (rank(trial) > r) {
                acc = std::move(trial);
                ++r;
                block = hstack(block, col);
            }
        }
        blocks.push_back(std::move(block));
    }
    return MatrixRep<Field>(v.poset(), v.field(), v.ambient_dim(), std::move(blocks));
}

// Special elements ---------------------------------------------------------

/// T_a: no rows, one column at a.
template <ExactField Field>
MatrixRep<Field> special_T(const Poset& p, const Field& f, std::size_t a) {
    auto u = MatrixRep<Field>::zero(p, f, 0);
    auto blocks = u.blocks();
    blocks.at(a) = Matrix<Field>(f, 0, 1);
    return MatrixRep<Field>(p, f, 0, std::move(blocks));
}

/// T_0: one row, no columns.
template <ExactField Field>
MatrixRep<Field> special_T0(const Poset& p, const Field& f) {
    return MatrixRep<Field>::zero(p, f, 1);
}

/// E_a: block (1) at a, empty elsewhere.
template <ExactField Field>
MatrixRep<Field> special_E(const Poset& p, const Field& f, std::size_t a) {
    auto blocks = MatrixRep<Field>::zero(p, f, 1).blocks();
    blocks.at(a) = Matrix<Field>::identity(f, 1);
    return MatrixRep<Field>(p, f, 1, std::move(blocks));
}

/// E_p for an incomparable pair p = {b, c}: blocks (1) at b and c.
template <ExactField Field>
MatrixRep<Field> special_E_pair(const Poset& p, const Field& f, std::size_t b, std::size_t c) {
    if (b == c || p.comparable(b, c))
        throw Error(ErrorCode::InvalidInput, "E_p needs two incomparable elements");
    auto blocks = MatrixRep<Field>::zero(p, f, 1).blocks();
    blocks.at(b) = Matrix<Field>::identity(f, 1);
    blocks.at(c) = Matrix<Field>::identity(f, 1);
    return MatrixRep<Field>(p, f, 1, std::move(blocks));
}

/// Block-diagonal juxtaposition.
template <ExactField Field>
MatrixRep<Field> direct_sum(const MatrixRep<Field>& u, const MatrixRep<Field>& v) {
    if (!(u.poset() == v.poset())) throw Error(ErrorCode::ContextMismatch, "direct sum over different posets");
    if (!(u.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "direct sum over different fields");
    std::vector<Matrix<Field>> blocks;
    for (std::size_t a = 0; a < u.poset().size(); ++a) blocks.push_back(block_diagonal(u.block(a), v.block(a)));
    return MatrixRep<Field>(u.poset(), u.field(), u.d0() + v.d0(), std::move(blocks));
}

template <ExactField Field>
SubspaceRep<Field> direct_sum(const SubspaceRep<Field>& v, const SubspaceRep<Field>& w) {
    if (!(v.poset() == w.poset())) throw Error(ErrorCode::ContextMismatch, "direct sum over different posets");
    std::vector<Matrix<Field>> spans;
    for (std::size_t a = 0; a < v.poset().size(); ++a) spans.push_back(block_diagonal(v.subspace(a), w.subspace(a)));
    return SubspaceRep<Field>(v.poset(), v.field(), v.ambient_dim() + w.ambient_dim(), std::move(spans));
}

/// Re-indexes a representation of an induced subposet onto the host poset
/// (empty blocks off the subset).
template <ExactField Field>
MatrixRep<Field> extend_to(const Poset& host, const ElementSet& subset, const MatrixRep<Field>& u) {
    auto blocks = MatrixRep<Field>::zero(host, u.field(), u.d0()).blocks();
    for (std::size_t i = 0; i < subset.size(); ++i) blocks.at(subset[i]) = u.block(i);
    return MatrixRep<Field>(host, u.field(), u.d0(), std::move(blocks));
}

/// Restriction to the elements of `subset` (as an induced subposet).
template <ExactField Field>
MatrixRep<Field> restrict_to(const MatrixRep<Field>& u, const ElementSet& subset) {
    std::vector<Matrix<Field>> blocks;
    for (auto s : subset) blocks.push_back(u.block(s));
    return MatrixRep<Field>(induced_subposet(u.poset(), subset), u.field(), u.d0(), std::move(blocks));
}

}  // namespace posetrep

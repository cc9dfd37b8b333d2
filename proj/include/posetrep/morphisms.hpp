#pragma once

// Morphisms of El elements and of subspace representations, and bases of
// the corresponding Hom spaces obtained as kernels of linear systems.

#include <cstddef>
#include <optional>
#include <vector>

#include "posetrep/matrix_rep.hpp"

namespace posetrep {

/// A morphism u → v of El elements: Φ0 (v.d0 × u.d0) and Φ1, a square-ish
/// matrix whose block (b, a) is Φ(ba) (d_v(b) × d_u(a)). Blocks with b ⋠ a
/// are zero. The defining identity is Φ0 · M_u = M_v · Φ1.
template <ExactField Field>
struct ElMorphism {
    Matrix<Field> phi0;
    Matrix<Field> phi1;

    /// Φ(ba): rows of block b of the target, columns of block a of the source.
    Matrix<Field> block(const MatrixRep<Field>& src, const MatrixRep<Field>& dst, std::size_t b, std::size_t a) const {
        return phi1.row_range(dst.column_offset(b), dst.columns(b)).column_range(src.column_offset(a), src.columns(a));
    }

    /// Φ(a) = Φ(aa).
    Matrix<Field> diagonal(const MatrixRep<Field>& src, const MatrixRep<Field>& dst, std::size_t a) const {
        return block(src, dst, a, a);
    }
};

template <ExactField Field>
struct RepMorphism {
    Matrix<Field> f;
};

template <ExactField Field>
bool is_el_morphism(const MatrixRep<Field>& u, const MatrixRep<Field>& v, const ElMorphism<Field>& m) {
    if (m.phi0.rows() != v.d0() || m.phi0.cols() != u.d0()) return false;
    if (m.phi1.rows() != v.total_columns() || m.phi1.cols() != u.total_columns()) return false;
    const Poset& p = u.poset();
    for (std::size_t b = 0; b < p.size(); ++b)
        for (std::size_t a = 0; a < p.size(); ++a)
            if (!p.leq(b, a) && !m.block(u, v, b, a).is_zero()) return false;
    return m.phi0 * u.full() == v.full() * m.phi1;
}

/// Both Φ0 and every diagonal block Φ(a) invertible.
template <ExactField Field>
bool is_el_isomorphism(const MatrixRep<Field>& u, const MatrixRep<Field>& v, const ElMorphism<Field>& m) {
    if (!is_el_morphism(u, v, m) || !is_invertible(m.phi0)) return false;
    for (std::size_t a = 0; a < u.poset().size(); ++a)
        if (!is_invertible(m.diagonal(u, v, a))) return false;
    return true;
}

template <ExactField Field>
ElMorphism<Field> compose(const ElMorphism<Field>& g, const ElMorphism<Field>& f) {
    return {g.phi0 * f.phi0, g.phi1 * f.phi1};
}

namespace detail {

/// Unknowns of Φ: the entries of Φ0 first (row major), then the entries of
/// each admissible block Φ(ba), b ⪯ a.
template <ExactField Field>
struct ElSystem {
    struct BlockVar {
        std::size_t b, a, offset;
    };
    std::size_t phi0_vars = 0;
    std::size_t total_vars = 0;
    std::vector<BlockVar> blocks;
    Matrix<Field> equations;

    ElMorphism<Field> assemble(const MatrixRep<Field>& u, const MatrixRep<Field>& v, const Vector<Field>& x) const {
        const Field& f = u.field();
        Matrix<Field> phi0(f, v.d0(), u.d0());
        for (std::size_t i = 0; i < v.d0(); ++i)
            for (std::size_t k = 0; k < u.d0(); ++k) phi0(i, k) = x[i * u.d0() + k];
        Matrix<Field> phi1(f, v.total_columns(), u.total_columns());
        for (const auto& bv : blocks) {
            std::size_t rows = v.columns(bv.b), cols = u.columns(bv.a);
            for (std::size_t l = 0; l < rows; ++l)
                for (std::size_t j = 0; j < cols; ++j)
                    phi1(v.column_offset(bv.b) + l, u.column_offset(bv.a) + j) = x[bv.offset + l * cols + j];
        }
        return {std::move(phi0), std::move(phi1)};
    }
};

template <ExactField Field>
ElSystem<Field> el_system(const MatrixRep<Field>& u, const MatrixRep<Field>& v) {
    if (!(u.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "Hom between different fields");
    if (!(u.poset() == v.poset())) throw Error(ErrorCode::ContextMismatch, "Hom between different posets");
    const Field& f = u.field();
    const Poset& p = u.poset();
    ElSystem<Field> sys{0, 0, {}, Matrix<Field>(f)};
    sys.phi0_vars = v.d0() * u.d0();
    std::size_t next = sys.phi0_vars;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(b, a) && u.columns(a) && v.columns(b)) {
                sys.blocks.push_back({b, a, next});
                next += v.columns(b) * u.columns(a);
            }
    sys.total_vars = next;

    // one equation per entry (i, global column c of u) of Φ0 M_u − M_v Φ1
    const std::size_t nc = u.total_columns();
    Matrix<Field> eq(f, v.d0() * nc, next);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t j = 0; j < u.columns(a); ++j) {
            const std::size_t c = u.column_offset(a) + j;
            for (std::size_t i = 0; i < v.d0(); ++i) {
                const std::size_t row = i * nc + c;
                for (std::size_t k = 0; k < u.d0(); ++k) eq(row, i * u.d0() + k) = u.block(a)(k, j);
                for (const auto& bv : sys.blocks) {
                    if (bv.a != a) continue;
                    const std::size_t cols = u.columns(a);
                    for (std::size_t l = 0; l < v.columns(bv.b); ++l)
                        eq(row, bv.offset + l * cols + j) = f.neg(v.block(bv.b)(i, l));
                }
            }
        }
    sys.equations = std::move(eq);
    return sys;
}

}  // namespace detail

/// Basis of Hom_El(u, v).
template <ExactField Field>
std::vector<ElMorphism<Field>> el_hom_basis(const MatrixRep<Field>& u, const MatrixRep<Field>& v) {
    auto sys = detail::el_system(u, v);
    std::vector<ElMorphism<Field>> out;
    for (const auto& x : nullspace_basis(sys.equations)) out.push_back(sys.assemble(u, v, x));
    return out;
}

/// Some morphism u → v with the prescribed Φ0, if one exists.
template <ExactField Field>
std::optional<ElMorphism<Field>> el_morphism_over(const MatrixRep<Field>& u, const MatrixRep<Field>& v,
                                                  const Matrix<Field>& phi0) {
    auto sys = detail::el_system(u, v);
    const Field& f = u.field();
    const std::size_t n1 = sys.total_vars - sys.phi0_vars;
    Matrix<Field> a1 = sys.equations.column_range(sys.phi0_vars, n1);
    Vector<Field> x0(sys.phi0_vars, f.zero());
    for (std::size_t i = 0; i < v.d0(); ++i)
        for (std::size_t k = 0; k < u.d0(); ++k) x0[i * u.d0() + k] = phi0(i, k);
    Vector<Field> rhs = sys.equations.column_range(0, sys.phi0_vars) * x0;
    for (auto& e : rhs) e = f.neg(e);
    auto y = solve(a1, rhs);
    if (!y) return std::nullopt;
    Vector<Field> x = x0;
    x.insert(x.end(), y->begin(), y->end());
    return sys.assemble(u, v, x);
}

template <ExactField Field>
std::size_t el_end_dimension(const MatrixRep<Field>& u) {
    return el_hom_basis(u, u).size();
}

/// dim Hom_El(u, v) restricted to Φ0 = 0.
template <ExactField Field>
std::size_t el_radical_part_dimension(const MatrixRep<Field>& u, const MatrixRep<Field>& v) {
    auto sys = detail::el_system(u, v);
    const std::size_t n1 = sys.total_vars - sys.phi0_vars;
    return n1 - rank(sys.equations.column_range(sys.phi0_vars, n1));
}

template <ExactField Field>
bool is_rep_morphism(const SubspaceRep<Field>& v, const SubspaceRep<Field>& w, const Matrix<Field>& f) {
    if (f.rows() != w.ambient_dim() || f.cols() != v.ambient_dim()) return false;
    for (std::size_t a = 0; a < v.poset().size(); ++a)
        if (!subspace::contains(w.subspace(a), f * v.subspace(a))) return false;
    return true;
}

/// Basis of Hom(V, W) = {f : f V(a) ⊆ W(a) for all a}.
template <ExactField Field>
std::vector<Matrix<Field>> rep_hom_basis(const SubspaceRep<Field>& v, const SubspaceRep<Field>& w) {
    if (!(v.field() == w.field())) throw Error(ErrorCode::FieldMismatch, "Hom between different fields");
    if (!(v.poset() == w.poset())) throw Error(ErrorCode::ContextMismatch, "Hom between different posets");
    const Field& fld = v.field();
    const std::size_t m = w.ambient_dim(), n = v.ambient_dim();
    // K_a f B_a = 0, K_a the annihilator rows of W(a), B_a a basis of V(a);
    // unknown f(i, j) sits at index i * n + j
    std::vector<Vector<Field>> rows;
    for (std::size_t a = 0; a < v.poset().size(); ++a) {
        Matrix<Field> k = subspace::annihilator(w.subspace(a));
        const Matrix<Field>& b = v.subspace(a);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) {
                Vector<Field> eq(m * n, fld.zero());
                for (std::size_t i = 0; i < m; ++i) {
                    if (fld.is_zero(k(r, i))) continue;
                    for (std::size_t j = 0; j < n; ++j) eq[i * n + j] = fld.mul(k(r, i), b(j, c));
                }
                rows.push_back(std::move(eq));
            }
    }
    Matrix<Field> system = Matrix<Field>::from_columns(fld, m * n, rows).transpose();
    std::vector<Matrix<Field>> out;
    for (const auto& x : nullspace_basis(system)) {
        Matrix<Field> f(fld, m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) f(i, j) = x[i * n + j];
        out.push_back(std::move(f));
    }
    return out;
}

template <ExactField Field>
std::size_t rep_end_dimension(const SubspaceRep<Field>& v) {
    return rep_hom_basis(v, v).size();
}

}  // namespace posetrep

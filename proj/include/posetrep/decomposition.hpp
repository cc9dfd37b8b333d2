#pragma once

// Indecomposability, Krull-Schmidt decomposition and isomorphism, for
// subspace representations and for El elements.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "posetrep/morphisms.hpp"

namespace posetrep {

inline constexpr std::uint64_t default_end_budget = std::uint64_t{1} << 20;

template <ExactField Field>
struct IndecomposabilityResult {
    bool indecomposable = false;
    /// A nontrivial idempotent endomorphism when decomposable.
    std::optional<Matrix<Field>> idempotent;
};

namespace detail {

template <ExactField Field>
Matrix<Field> matrix_power(const Matrix<Field>& x, std::size_t e) {
    Matrix<Field> r = Matrix<Field>::identity(x.field(), x.rows());
    Matrix<Field> b = x;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

template <ExactField Field>
bool is_nilpotent(const Matrix<Field>& x) {
    return matrix_power(x, x.rows()).is_zero();
}

template <ExactField Field>
Matrix<Field> shifted(const Matrix<Field>& x, const typename Field::Element& lambda) {
    const Field& f = x.field();
    Matrix<Field> y = x;
    for (std::size_t i = 0; i < x.rows(); ++i) y(i, i) = f.sub(y(i, i), lambda);
    return y;
}

/// Scalars worth trying as eigenvalues of x.
inline std::vector<PrimeField::Element> eigenvalue_candidates(const Matrix<PrimeField>& x) {
    const PrimeField& f = x.field();
    std::vector<PrimeField::Element> out;
    if (f.characteristic() <= 4096) {
        for (std::uint32_t v = 0; v < f.characteristic(); ++v) out.push_back(v);
        return out;
    }
    out.push_back(0);
    PrimeField::Element tr = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) tr = f.add(tr, x(i, i));
    if (x.rows() % f.characteristic() != 0) out.push_back(f.mul(tr, f.inv(f.from_int(static_cast<std::int64_t>(x.rows())))));
    for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(x(i, i));
    return out;
}

/// Rational roots of the characteristic polynomial.
inline std::vector<RationalField::Element> eigenvalue_candidates(const Matrix<RationalField>& x) {
    using boost::multiprecision::cpp_int;
    using Q = RationalField::Element;
    const RationalField& f = x.field();
    const std::size_t n = x.rows();
    // Faddeev-LeVerrier: c[k] is the coefficient of t^k, c[n] = 1.
    std::vector<Q> c(n + 1, Q(0));
    c[n] = 1;
    Matrix<RationalField> m(f, n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = x * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        Matrix<RationalField> am = x * m;
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Q(static_cast<long long>(k));
    }
    cpp_int l = 1;
    for (const auto& q : c) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
    std::vector<cpp_int> z;
    for (const auto& q : c) z.push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
    std::vector<Q> out;
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) out.push_back(Q(0));
    if (low >= n) return out;
    auto divisors = [](cpp_int v) -> std::optional<std::vector<cpp_int>> {
        if (v < 0) v = -v;
        if (v > cpp_int(1'000'000'000'000LL)) return std::nullopt;
        std::vector<cpp_int> d;
        for (cpp_int k = 1; k * k <= v; ++k)
            if (v % k == 0) {
                d.push_back(k);
                if (k * k != v) d.push_back(v / k);
            }
        return d;
    };
    auto p_div = divisors(z[low]);
    auto q_div = divisors(z[n]);
    if (!p_div || !q_div) return out;
    auto eval = [&](const Q& t) {
        Q acc = 0;
        for (std::size_t k = n + 1; k-- > 0;) acc = acc * t + c[k];
        return acc;
    };
    for (const auto& p : *p_div)
        for (const auto& q : *q_div)
            for (int s : {1, -1}) {
                Q t(cpp_int(s) * p, q);
                if (eval(t) == 0 && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            }
    return out;
}

/// For x neither nilpotent nor invertible: the projection onto im x^n along
/// ker x^n, an idempotent lying in any algebra containing x.
template <ExactField Field>
std::optional<Matrix<Field>> fitting_idempotent(const Matrix<Field>& x) {
    const std::size_t n = x.rows();
    Matrix<Field> y = matrix_power(x, n);
    Matrix<Field> im = canonical_column_basis(y);
    if (im.cols() == 0 || im.cols() == n) return std::nullopt;
    Matrix<Field> basis = hstack(im, nullspace_matrix(y));
    Matrix<Field> proj(x.field(), n, n);
    for (std::size_t i = 0; i < im.cols(); ++i) proj(i, i) = x.field().one();
    return basis * proj * *inverse(basis);
}

/// Whether every product of k elements of span(gens) vanishes for some k.
template <ExactField Field>
bool is_nilpotent_algebra(const std::vector<Matrix<Field>>& gens, std::size_t n) {
    if (gens.empty()) return true;
    auto flatten = [n](const std::vector<Matrix<Field>>& ms) {
        std::vector<Vector<Field>> cols;
        for (const auto& m : ms) {
            Vector<Field> v;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) v.push_back(m(i, j));
            cols.push_back(std::move(v));
        }
        return cols;
    };
    auto reduce = [&](const std::vector<Matrix<Field>>& ms) {
        const Field& f = gens.front().field();
        Matrix<Field> stacked = Matrix<Field>::from_columns(f, n * n, flatten(ms));
        Matrix<Field> b = canonical_column_basis(stacked);
        std::vector<Matrix<Field>> out;
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Matrix<Field> m(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = b(i * n + j, c);
            out.push_back(std::move(m));
        }
        return out;
    };
    std::vector<Matrix<Field>> power = reduce(gens);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        if (power.empty()) return true;
        std::vector<Matrix<Field>> next;
        for (const auto& x : power)
            for (const auto& g : gens) next.push_back(x * g);
        power = reduce(next);
    }
    return power.empty();
}

template <ExactField Field>
std::uint64_t field_order_power(const Field&, std::size_t) {
    return 0;
}

inline std::uint64_t field_order_power(const PrimeField& f, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 40) / f.characteristic()) return UINT64_MAX;
        r *= f.characteristic();
    }
    return r;
}

/// Exhaustive scan of End over GF(p) for an element that is neither
/// nilpotent nor invertible.
inline std::optional<Matrix<PrimeField>> exhaustive_split(const std::vector<Matrix<PrimeField>>& basis) {
    const PrimeField& f = basis.front().field();
    const std::uint32_t p = f.characteristic();
    std::vector<std::uint32_t> coeff(basis.size(), 0);
    while (true) {
        std::size_t i = 0;
        for (; i < coeff.size(); ++i) {
            if (++coeff[i] < p) break;
            coeff[i] = 0;
        }
        if (i == coeff.size()) return std::nullopt;
        Matrix<PrimeField> x(f, basis.front().rows(), basis.front().cols());
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (coeff[k]) x = x + basis[k].scaled(coeff[k]);
        if (auto e = fitting_idempotent(x)) return e;
    }
}

template <ExactField Field>
std::optional<Matrix<Field>> exhaustive_split(const std::vector<Matrix<Field>>&) {
    return std::nullopt;
}

}  // namespace detail

/// Decides whether V is indecomposable. Steps: dim End = 1; End = k·1 plus
/// a nilpotent ideal; a Fitting split of some basis element; exhaustive
/// search when End is finite and at most `budget` elements.
template <ExactField Field>
IndecomposabilityResult<Field> is_indecomposable(const SubspaceRep<Field>& v,
                                                 std::uint64_t budget = default_end_budget) {
    const std::size_t n = v.ambient_dim();
    if (n == 0) return {false, std::nullopt};
    auto end = rep_hom_basis(v, v);
    if (end.size() == 1) return {true, std::nullopt};

    std::vector<Matrix<Field>> radical;
    bool local_shape = true;
    for (const auto& b : end) {
        bool found = false;
        for (const auto& lambda : detail::eigenvalue_candidates(b)) {
            Matrix<Field> s = detail::shifted(b, lambda);
            if (detail::is_nilpotent(s)) {
                radical.push_back(std::move(s));
                found = true;
                break;
            }
        }
        if (!found) {
            local_shape = false;
            break;
        }
    }
    if (local_shape && detail::is_nilpotent_algebra(radical, n)) return {true, std::nullopt};

    for (const auto& b : end)
        for (const auto& lambda : detail::eigenvalue_candidates(b))
            if (auto e = detail::fitting_idempotent(detail::shifted(b, lambda))) return {false, std::move(e)};

    const std::uint64_t order = detail::field_order_power(v.field(), end.size());
    if (order != 0 && order <= budget) {
        if (auto e = detail::exhaustive_split(end)) return {false, std::move(e)};
        return {true, std::nullopt};
    }
    throw Error(ErrorCode::UndecidableAtBudget,
                "End has dimension " + std::to_string(end.size()) + " and no decision was reached");
}

/// A summand of V: its coordinates (embedding, ambient × k) and the
/// representation it carries in those coordinates.
template <ExactField Field>
struct RepSummand {
    Matrix<Field> embedding;
    SubspaceRep<Field> piece;
};

namespace detail {

template <ExactField Field>
SubspaceRep<Field> restrict_along(const SubspaceRep<Field>& v, const Matrix<Field>& e, const Matrix<Field>& basis) {
    std::vector<Matrix<Field>> spans;
    for (std::size_t a = 0; a < v.poset().size(); ++a)
        spans.push_back(subspace::coordinates(basis, e * v.subspace(a)));
    return SubspaceRep<Field>(v.poset(), v.field(), basis.cols(), std::move(spans));
}

template <ExactField Field>
void decompose_into(const SubspaceRep<Field>& v, const Matrix<Field>& embedding, std::uint64_t budget,
                    std::vector<RepSummand<Field>>& out) {
    if (v.ambient_dim() == 0) return;
    auto r = is_indecomposable(v, budget);
    if (r.indecomposable) {
        out.push_back({embedding, v});
        return;
    }
    const Matrix<Field>& e = *r.idempotent;
    Matrix<Field> one = Matrix<Field>::identity(v.field(), v.ambient_dim());
    Matrix<Field> f = one - e;
    Matrix<Field> b1 = canonical_column_basis(e);
    Matrix<Field> b2 = canonical_column_basis(f);
    decompose_into(restrict_along(v, e, b1), embedding * b1, budget, out);
    decompose_into(restrict_along(v, f, b2), embedding * b2, budget, out);
}

}  // namespace detail

/// Indecomposable summands of V whose embeddings together form a basis of V(0).
template <ExactField Field>
std::vector<RepSummand<Field>> decompose(const SubspaceRep<Field>& v, std::uint64_t budget = default_end_budget) {
    std::vector<RepSummand<Field>> out;
    detail::decompose_into(v, Matrix<Field>::identity(v.field(), v.ambient_dim()), budget, out);
    return out;
}

/// For indecomposable V and W: an isomorphism V → W, if there is one.
/// End V is local, so V ≅ W iff g∘f is invertible for some basis elements
/// f of Hom(V, W) and g of Hom(W, V).
template <ExactField Field>
std::optional<Matrix<Field>> indecomposable_isomorphism(const SubspaceRep<Field>& v, const SubspaceRep<Field>& w) {
    if (v.ambient_dim() != w.ambient_dim()) return std::nullopt;
    for (std::size_t a = 0; a < v.poset().size(); ++a)
        if (v.dim(a) != w.dim(a)) return std::nullopt;
    auto fs = rep_hom_basis(v, w);
    auto gs = rep_hom_basis(w, v);
    for (const auto& f : fs)
        for (const auto& g : gs)
            if (is_invertible(g * f)) return f;
    return std::nullopt;
}

/// An isomorphism V → W assembled from matched indecomposable summands.
template <ExactField Field>
std::optional<Matrix<Field>> rep_isomorphism(const SubspaceRep<Field>& v, const SubspaceRep<Field>& w,
                                             std::uint64_t budget = default_end_budget) {
    if (!(v.poset() == w.poset())) throw Error(ErrorCode::ContextMismatch, "isomorphism over different posets");
    if (!(v.field() == w.field())) throw Error(ErrorCode::FieldMismatch, "isomorphism over different fields");
    if (v.ambient_dim() != w.ambient_dim() || !(v.dimension() == w.dimension())) return std::nullopt;
    auto sv = decompose(v, budget);
    auto sw = decompose(w, budget);
    if (sv.size() != sw.size()) return std::nullopt;
    const Field& fld = v.field();
    Matrix<Field> source(fld, v.ambient_dim(), 0), target(fld, w.ambient_dim(), 0);
    std::vector<bool> used(sw.size(), false);
    for (const auto& s : sv) {
        bool matched = false;
        for (std::size_t j = 0; j < sw.size() && !matched; ++j) {
            if (used[j]) continue;
            if (auto iso = indecomposable_isomorphism(s.piece, sw[j].piece)) {
                used[j] = true;
                matched = true;
                source = hstack(source, s.embedding);
                target = hstack(target, sw[j].embedding * *iso);
            }
        }
        if (!matched) return std::nullopt;
    }
    return target * *inverse(source);
}

/// Indecomposable with V(a) ≠ V(0) and V(a) ≠ Σ_{b≺a} V(b) for every a.
template <ExactField Field>
bool is_quite_sincere(const SubspaceRep<Field>& v, std::uint64_t budget = default_end_budget) {
    for (std::size_t a = 0; a < v.poset().size(); ++a) {
        if (v.dim(a) == v.ambient_dim()) return false;
        if (v.dim(a) == v.lower_sum(a).cols()) return false;
    }
    return is_indecomposable(v, budget).indecomposable;
}

// El level ------------------------------------------------------------------

/// Splits off trivial summands T_a. Within block a, a column of u that lies
/// in the span of earlier columns of a and of the blocks below a is cleared
/// by a column operation; Γ collects those operations (block triangular,
/// invertible) and M_u · Γ has the kept columns first in each block and zero
/// columns after them.
template <ExactField Field>
struct TrivialSplit {
    MatrixRep<Field> reduced;
    std::vector<std::size_t> trivial;
    Matrix<Field> gamma;
};

template <ExactField Field>
TrivialSplit<Field> split_trivial(const MatrixRep<Field>& u) {
    const Field& f = u.field();
    const Poset& p = u.poset();
    const std::size_t nc = u.total_columns();
    Matrix<Field> gamma(f, nc, nc);
    std::vector<Matrix<Field>> kept_blocks;
    std::vector<std::size_t> trivial;
    for (std::size_t a = 0; a < p.size(); ++a) {
        const ElementSet below = p.strict_lower_cone(a);
        std::vector<std::size_t> lower_cols;
        for (auto b : below)
            for (std::size_t j = 0; j < u.columns(b); ++j) lower_cols.push_back(u.column_offset(b) + j);
        Matrix<Field> lower = u.stacked(below);
        const Matrix<Field>& m = u.block(a);
        std::vector<std::size_t> kept;
        std::vector<std::pair<std::size_t, Vector<Field>>> cleared;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Matrix<Field> basis = lower;
            for (auto k : kept) basis = hstack(basis, m.column_range(k, 1));
            if (auto x = solve(basis, m.column(j)))
                cleared.emplace_back(j, std::move(*x));
            else
                kept.push_back(j);
        }
        const std::size_t off = u.column_offset(a);
        std::size_t pos = off;
        Matrix<Field> kb(f, u.d0(), 0);
        for (auto k : kept) {
            gamma(off + k, pos++) = f.one();
            kb = hstack(kb, m.column_range(k, 1));
        }
        for (const auto& [j, x] : cleared) {
            gamma(off + j, pos) = f.one();
            for (std::size_t l = 0; l < lower_cols.size(); ++l) gamma(lower_cols[l], pos) = f.neg(x[l]);
            for (std::size_t k = 0; lower_cols.size() + k < x.size(); ++k)
                gamma(off + kept[k], pos) = f.sub(gamma(off + kept[k], pos), x[lower_cols.size() + k]);
            ++pos;
        }
        kept_blocks.push_back(std::move(kb));
        trivial.push_back(cleared.size());
    }
    return {MatrixRep<Field>(p, f, u.d0(), std::move(kept_blocks)), std::move(trivial), std::move(gamma)};
}

/// El-level decomposition: nontrivial indecomposable summands (as lifts of
/// the rep-level summands) and the multiplicity of each T_a.
template <ExactField Field>
struct ElDecomposition {
    std::vector<MatrixRep<Field>> summands;
    std::vector<std::size_t> trivial;
};

template <ExactField Field>
ElDecomposition<Field> decompose(const MatrixRep<Field>& u, std::uint64_t budget = default_end_budget) {
    auto split = split_trivial(u);
    ElDecomposition<Field> out{{}, split.trivial};
    for (const auto& s : decompose(rho(split.reduced), budget)) out.summands.push_back(lift(s.piece));
    return out;
}

template <ExactField Field>
bool is_indecomposable(const MatrixRep<Field>& u, std::uint64_t budget = default_end_budget) {
    if (u.d0() == 0) return u.total_columns() == 1;
    auto split = split_trivial(u);
    for (auto t : split.trivial)
        if (t) return false;
    return is_indecomposable(rho(u), budget).indecomposable;
}

/// An El isomorphism u → v, if one exists.
template <ExactField Field>
std::optional<ElMorphism<Field>> are_isomorphic(const MatrixRep<Field>& u, const MatrixRep<Field>& v,
                                                std::uint64_t budget = default_end_budget) {
    if (!(u.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "isomorphism over different fields");
    if (!(u.poset() == v.poset())) throw Error(ErrorCode::ContextMismatch, "isomorphism over different posets");
    if (!(u.dimension() == v.dimension())) return std::nullopt;
    auto su = split_trivial(u);
    auto sv = split_trivial(v);
    if (su.trivial != sv.trivial) return std::nullopt;
    auto f = rep_isomorphism(rho(su.reduced), rho(sv.reduced), budget);
    if (!f) return std::nullopt;
    auto reduced = el_morphism_over(su.reduced, sv.reduced, *f);
    if (!reduced) return std::nullopt;

    // the reduced morphism on kept columns, identity on cleared ones
    const Field& fld = u.field();
    const Poset& p = u.poset();
    const std::size_t nc = u.total_columns();
    Matrix<Field> phi(fld, nc, nc);
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.leq(b, a)) phi.place(v.column_offset(b), u.column_offset(a), reduced->block(su.reduced, sv.reduced, b, a));
        const std::size_t k = su.reduced.columns(a);
        for (std::size_t t = 0; t < su.trivial[a]; ++t) phi(v.column_offset(a) + k + t, u.column_offset(a) + k + t) = fld.one();
    }
    ElMorphism<Field> m{*f, sv.gamma * phi * *inverse(su.gamma)};
    if (!is_el_isomorphism(u, v, m)) return std::nullopt;
    return m;
}

}  // namespace posetrep

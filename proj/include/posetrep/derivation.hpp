#pragma once

// Differentiation with respect to a maximal element: the derived poset S^a,
// the derived representation D_a V, matrix-level integration and the
// dimension bookkeeping that goes with it.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "posetrep/matrix_rep.hpp"

namespace posetrep {

/// An incomparable pair {p′, p″} ⊆ Θ(a), as base indices.
struct DerivedPair {
    std::size_t first;   // p′
    std::size_t second;  // p″

    friend bool operator==(const DerivedPair&, const DerivedPair&) = default;
};

/// S^a = (S ∪ Π(a)) ∖ {a}. Result indices: the elements of S other than a,
/// in base order, then the pairs in the order of `pairs`.
struct DerivedPoset {
    Poset base;
    std::size_t pivot = 0;
    std::vector<DerivedPair> pairs;
    Poset result;

    std::size_t element_count() const { return base.size() - 1; }

    bool is_pair(std::size_t r) const { return r >= element_count(); }

    std::size_t base_of(std::size_t r) const { return r < pivot ? r : r + 1; }

    const DerivedPair& pair_of(std::size_t r) const { return pairs.at(r - element_count()); }

    std::size_t result_of_base(std::size_t b) const {
        if (b == pivot) throw Error(ErrorCode::InvalidInput, "the pivot has no image in the derived poset");
        return b < pivot ? b : b - 1;
    }

    std::size_t result_of_pair(std::size_t k) const { return element_count() + k; }

    /// Base elements making up result element r.
    ElementSet members(std::size_t r) const {
        if (!is_pair(r)) return {base_of(r)};
        const auto& p = pair_of(r);
        return p.first < p.second ? ElementSet{p.first, p.second} : ElementSet{p.second, p.first};
    }
};

inline DerivedPoset derive_poset(const Poset& s, std::size_t a) {
    if (a >= s.size()) throw Error(ErrorCode::UnknownElement, "pivot index out of range");
    if (!s.is_maximal(a)) throw Error(ErrorCode::NotMaximal, "'" + s.label(a) + "' is not maximal");
    DerivedPoset out;
    out.base = s;
    out.pivot = a;
    const ElementSet theta = s.incomparables(a);
    for (std::size_t i = 0; i < theta.size(); ++i)
        for (std::size_t j = i + 1; j < theta.size(); ++j) {
            std::size_t b = theta[i], c = theta[j];
            if (s.comparable(b, c)) continue;
            const bool mb = s.is_maximal(b), mc = s.is_maximal(c);
            // p″ is the maximal member when exactly one is maximal
            if (mb && !mc)
                out.pairs.push_back({c, b});
            else
                out.pairs.push_back({b, c});
        }

    std::vector<std::string> labels;
    std::vector<ElementSet> sets;
    for (std::size_t b = 0; b < s.size(); ++b)
        if (b != a) {
            labels.push_back(s.label(b));
            sets.push_back({b});
        }
    auto taken = [&](const std::string& l) {
        for (const auto& x : labels)
            if (x == l) return true;
        return false;
    };
    for (const auto& p : out.pairs) {
        std::size_t lo = std::min(p.first, p.second), hi = std::max(p.first, p.second);
        std::string l = "(" + s.label(lo) + "," + s.label(hi) + ")";
        while (taken(l)) l += "'";
        labels.push_back(l);
        sets.push_back({lo, hi});
    }
    auto below = [&](const ElementSet& x, const ElementSet& y) {
        for (auto u : x) {
            bool ok = false;
            for (auto v : y) ok = ok || s.leq(u, v);
            if (!ok) return false;
        }
        return true;
    };
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (i != j && below(sets[i], sets[j])) rel.emplace_back(i, j);
    out.result = Poset::from_indices(std::move(labels), rel);
    return out;
}

inline DerivedPoset derive_poset(const Poset& s, const std::string& a) { return derive_poset(s, s.index_of(a)); }

/// w(Θ(a)). Integration inverts D_a up to O(a) only when this is at most 2.
inline std::size_t theta_width(const Poset& s, std::size_t a) {
    return width(induced_subposet(s, s.incomparables(a))).size();
}

/// How D_a V is evaluated at a pair p.
enum class PairRule {
    Sum,           // (V(p′) + V(p″)) ∩ V(a)
    Intersection,  // V(p′) ∩ V(p″) ∩ V(a)
};

/// D_a V over S^a, written in coordinates of the canonical basis of V(a).
template <ExactField Field>
SubspaceRep<Field> differentiate(const SubspaceRep<Field>& v, const DerivedPoset& ctx, PairRule rule = PairRule::Sum) {
    if (!(v.poset() == ctx.base)) throw Error(ErrorCode::ContextMismatch, "representation is not over the base poset");
    const Matrix<Field>& va = v.subspace(ctx.pivot);
    std::vector<Matrix<Field>> spans;
    for (std::size_t r = 0; r < ctx.result.size(); ++r) {
        Matrix<Field> w(v.field(), v.ambient_dim(), 0);
        if (!ctx.is_pair(r)) {
            w = subspace::intersection(v.subspace(ctx.base_of(r)), va);
        } else {
            const auto& p = ctx.pair_of(r);
            Matrix<Field> inner = rule == PairRule::Sum
                                      ? subspace::sum(v.subspace(p.first), v.subspace(p.second))
                                      : subspace::intersection(v.subspace(p.first), v.subspace(p.second));
            w = subspace::intersection(inner, va);
        }
        spans.push_back(subspace::coordinates(va, w));
    }
    return SubspaceRep<Field>(ctx.result, v.field(), va.cols(), std::move(spans));
}

/// d*(0) = d′(0) + Σ_p d′(p); d*(a) = da; d*(b) = d′(b) on Δ(a) ∖ {a};
/// d*(b) = d′(b) + Σ_{p∋b} d′(p) on Θ(a).
inline DimensionVector dstar(const DimensionVector& dp, const DerivedPoset& ctx, std::int64_t da) {
    if (dp.size() != ctx.result.size())
        throw Error(ErrorCode::ContextMismatch, "dimension vector is not over the derived poset");
    DimensionVector d = DimensionVector::zero(ctx.base.size());
    d.d0 = dp.d0;
    for (std::size_t r = 0; r < ctx.element_count(); ++r) d[ctx.base_of(r)] = dp[r];
    for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
        const auto x = dp[ctx.result_of_pair(k)];
        d.d0 += x;
        d[ctx.pairs[k].first] += x;
        d[ctx.pairs[k].second] += x;
    }
    d[ctx.pivot] = da;
    return d;
}

/// ∫_a v. Rows: the d′(0) rows of v, then one stripe of d′(p) rows per pair.
///   M*(a) = [X; 0], X completing the blocks of Δ(a) ∖ {a} to full rank;
///   M*(b) = [M(b); 0] for b ≺ a;
///   M*(b) = [M(b) | M_b(p1) | ...; 0 | Z_b] for b ∈ Θ(a), where M_b(p) is
///   M(p) when b = p″ and 0 when b = p′, and Z_b places an identity on the
///   stripe of each pair containing b.
template <ExactField Field>
MatrixRep<Field> integrate(const MatrixRep<Field>& v, const DerivedPoset& ctx) {
    if (!(v.poset() == ctx.result)) throw Error(ErrorCode::ContextMismatch, "element is not over the derived poset");
    const Field& f = v.field();
    const Poset& s = ctx.base;
    const std::size_t top = v.d0();
    std::vector<std::size_t> stripe;  // first row of each pair stripe
    std::size_t rows = top;
    for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
        stripe.push_back(rows);
        rows += v.columns(ctx.result_of_pair(k));
    }

    std::vector<Matrix<Field>> blocks(s.size(), Matrix<Field>(f, rows, 0));
    Matrix<Field> lower(f, top, 0);
    for (auto b : s.strict_lower_cone(ctx.pivot)) {
        const Matrix<Field>& m = v.block(ctx.result_of_base(b));
        lower = hstack(lower, m);
        Matrix<Field> blk(f, rows, m.cols());
        blk.place(0, 0, m);
        blocks[b] = std::move(blk);
    }
    Matrix<Field> x = complete_to_full_rank(lower);
    Matrix<Field> ba(f, rows, x.cols());
    ba.place(0, 0, x);
    blocks[ctx.pivot] = std::move(ba);

    for (auto b : s.incomparables(ctx.pivot)) {
        const Matrix<Field>& m = v.block(ctx.result_of_base(b));
        std::size_t cols = m.cols();
        for (std::size_t k = 0; k < ctx.pairs.size(); ++k)
            if (ctx.pairs[k].first == b || ctx.pairs[k].second == b) cols += v.columns(ctx.result_of_pair(k));
        Matrix<Field> blk(f, rows, cols);
        blk.place(0, 0, m);
        std::size_t c = m.cols();
        for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
            const auto& p = ctx.pairs[k];
            if (p.first != b && p.second != b) continue;
            const Matrix<Field>& mp = v.block(ctx.result_of_pair(k));
            if (p.second == b) blk.place(0, c, mp);
            blk.place(stripe[k], c, Matrix<Field>::identity(f, mp.cols()));
            c += mp.cols();
        }
        blocks[b] = std::move(blk);
    }
    return MatrixRep<Field>(s, f, rows, std::move(blocks));
}

/// All d′ over S^a whose integration has dimension d, assuming the blocks
/// below a have independent columns: d′(0) = Σ_{b⪯a} d(b), d′ = d on
/// Δ(a) ∖ {a}, pair values summing to d0 − d′(0), d′(b) = d(b) − Σ_{p∋b} d′(p).
inline std::vector<DimensionVector> subordinate_dimensions(const DerivedPoset& ctx, const DimensionVector& d) {
    const Poset& s = ctx.base;
    if (d.size() != s.size()) throw Error(ErrorCode::ContextMismatch, "dimension vector is not over the base poset");
    std::int64_t head = 0;
    for (auto b : s.lower_cone(ctx.pivot)) head += d[b];
    const std::int64_t spare = d.d0 - head;
    std::vector<DimensionVector> out;
    if (spare < 0) return out;

    DimensionVector dp = DimensionVector::zero(ctx.result.size());
    dp.d0 = head;
    for (std::size_t r = 0; r < ctx.element_count(); ++r) dp[r] = d[ctx.base_of(r)];
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t k, std::int64_t left) {
        if (k == ctx.pairs.size()) {
            if (left == 0) out.push_back(dp);
            return;
        }
        const auto& p = ctx.pairs[k];
        std::size_t rb = ctx.result_of_base(p.first), rc = ctx.result_of_base(p.second);
        std::int64_t cap = std::min({left, dp[rb], dp[rc]});
        for (std::int64_t x = 0; x <= cap; ++x) {
            dp[ctx.result_of_pair(k)] = x;
            dp[rb] -= x;
            dp[rc] -= x;
            fill(k + 1, left - x);
            dp[rb] += x;
            dp[rc] += x;
        }
        dp[ctx.result_of_pair(k)] = 0;
    };
    fill(0, spare);
    return out;
}

inline std::vector<DimensionVector> subordinate_dimensions(const Poset& s, std::size_t a, const DimensionVector& d) {
    return subordinate_dimensions(derive_poset(s, a), d);
}

/// O(a) = {T_0, E_b (b ∈ Θ(a)), E_p (p ∈ Π(a))}.
struct ExceptionalMember {
    std::string name;
    ElementSet elements;  // empty for T_0
    DimensionVector dimension;
};

struct ExceptionalSet {
    std::vector<ExceptionalMember> members;
};

inline ExceptionalSet exceptional_set(const DerivedPoset& ctx) {
    const Poset& s = ctx.base;
    ExceptionalSet out;
    DimensionVector t0 = DimensionVector::zero(s.size());
    t0.d0 = 1;
    out.members.push_back({"T0", {}, t0});
    for (auto b : s.incomparables(ctx.pivot)) {
        DimensionVector e = t0;
        e[b] = 1;
        out.members.push_back({"E_" + s.label(b), {b}, e});
    }
    for (std::size_t k = 0; k < ctx.pairs.size(); ++k) {
        const auto& p = ctx.pairs[k];
        DimensionVector e = t0;
        e[p.first] = 1;
        e[p.second] = 1;
        out.members.push_back({"E_" + ctx.result.label(ctx.result_of_pair(k)), ctx.members(ctx.result_of_pair(k)), e});
    }
    return out;
}

inline ExceptionalSet exceptional_set(const Poset& s, std::size_t a) { return exceptional_set(derive_poset(s, a)); }

/// The elements of O(a) as El elements: one row, block (1) on the members.
template <ExactField Field>
std::vector<MatrixRep<Field>> exceptional_elements(const DerivedPoset& ctx, const Field& f) {
    std::vector<MatrixRep<Field>> out;
    for (const auto& m : exceptional_set(ctx).members) {
        auto blocks = MatrixRep<Field>::zero(ctx.base, f, 1).blocks();
        for (auto b : m.elements) blocks[b] = Matrix<Field>::identity(f, 1);
        out.emplace_back(ctx.base, f, 1, std::move(blocks));
    }
    return out;
}

}  // namespace posetrep

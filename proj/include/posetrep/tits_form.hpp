#pragma once

// The quadratic form of a poset, the table of critical dimensions and the
// two finite-type criteria: no dominated critical dimension (the primary
// decision procedure) and positivity below d (an exhaustive cross-check).

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetrep/critical.hpp"
#include "posetrep/dimension.hpp"

namespace posetrep {

namespace detail {
inline void check_shape(const Poset& p, const DimensionVector& d) {
    if (d.size() != p.size())
        throw Error(ErrorCode::InvalidInput, "dimension vector has " + std::to_string(d.size()) +
                                                 " entries for a poset of " + std::to_string(p.size()));
}
}  // namespace detail

/// d0² + Σ d(a)² + Σ_{a≺b} d(a)d(b): dimension of Aut L × Aut P.
inline std::int64_t group_dimension(const Poset& p, const DimensionVector& d) {
    detail::check_shape(p, d);
    std::int64_t g = d.d0 * d.d0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        g += d[a] * d[a];
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(a, b)) g += d[a] * d[b];
    }
    return g;
}

/// Σ d0·d(a): dimension of the space of block matrices of shape d.
inline std::int64_t space_dimension(const Poset& p, const DimensionVector& d) {
    detail::check_shape(p, d);
    std::int64_t s = 0;
    for (std::size_t a = 0; a < p.size(); ++a) s += d.d0 * d[a];
    return s;
}

/// Q(x) = Σ_{S∪0} x_a² + Σ_{a≺b} x_a x_b − Σ_S x_0 x_a.
inline std::int64_t tits_value(const Poset& p, const DimensionVector& d) {
    detail::check_shape(p, d);
    std::int64_t q = d.d0 * d.d0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        q += d[a] * d[a] - d.d0 * d[a];
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(a, b)) q += d[a] * d[b];
    }
    return q;
}

inline bool is_root(const Poset& p, const DimensionVector& d) { return tits_value(p, d) == 1; }

/// A row of the critical-dimension table: values on the abstract critical
/// poset (indexed like critical_poset(kind)) and at 0.
struct CriticalDimension {
    CriticalKind kind;
    std::int64_t c0;
    std::vector<std::int64_t> values;

    DimensionVector as_dimension() const { return {c0, values}; }
};

inline const std::array<CriticalDimension, 5>& critical_dimension_table() {
    static const std::array<CriticalDimension, 5> table{{
        {CriticalKind::A4, 2, {1, 1, 1, 1}},
        {CriticalKind::T222, 3, {1, 1, 1, 1, 1, 1}},
        {CriticalKind::T133, 4, {2, 1, 1, 1, 1, 1, 1}},
        {CriticalKind::T125, 6, {3, 2, 2, 1, 1, 1, 1, 1}},
        // a1 a2 b1 b2 c1..c4
        {CriticalKind::K, 5, {1, 2, 2, 1, 1, 1, 1, 1}},
    }};
    return table;
}

inline const CriticalDimension& critical_dimension(CriticalKind kind) {
    return critical_dimension_table()[static_cast<std::size_t>(kind)];
}

struct CriticalDomination {
    CriticalDimension dimension;
    CriticalEmbedding embedding;

    /// The critical dimension pushed forward to the host poset.
    DimensionVector on_host(std::size_t host_size) const {
        DimensionVector d = DimensionVector::zero(host_size);
        d.d0 = dimension.c0;
        for (std::size_t i = 0; i < embedding.image.size(); ++i) d[embedding.image[i]] = dimension.values[i];
        return d;
    }
};

inline bool dominates(const CriticalEmbedding& e, const DimensionVector& d) {
    const auto& c = critical_dimension(e.kind);
    if (c.c0 > d.d0) return false;
    for (std::size_t i = 0; i < e.image.size(); ++i)
        if (c.values[i] > d[e.image[i]]) return false;
    return true;
}

/// First critical dimension C ≤ d over a precomputed embedding list.
inline std::optional<CriticalDomination> dominated_critical(const std::vector<CriticalEmbedding>& embeddings,
                                                            const DimensionVector& d) {
    for (const auto& e : embeddings)
        if (dominates(e, d)) return CriticalDomination{critical_dimension(e.kind), e};
    return std::nullopt;
}

/// Some critical C and an embedding φ of its support with C(0) ≤ d0 and
/// C(x) ≤ d(φ(x)); embeddings supply the automorphic placements.
/// Only elements in supp d can carry a critical value, so the search runs
/// on the support.
inline std::optional<CriticalDomination> dominated_critical(const Poset& p, const DimensionVector& d) {
    detail::check_shape(p, d);
    if (d.d0 < 2) return std::nullopt;
    ElementSet supp = d.support();
    Poset sub = induced_subposet(p, supp);
    DimensionVector dsub = d.restrict_to(supp);
    const std::size_t w = width(sub).size();
    std::optional<CriticalDomination> found;
    for (auto kind : all_critical_kinds) {
        for_each_critical_embedding(sub, kind, w, [&](const CriticalEmbedding& e) {
            if (!dominates(e, dsub)) return true;
            CriticalEmbedding lifted{e.kind, {}};
            for (auto i : e.image) lifted.image.push_back(supp[i]);
            found = CriticalDomination{critical_dimension(kind), lifted};
            return false;
        });
        if (found) break;
    }
    return found;
}

/// Finite type: no critical dimension below d.
inline bool is_finite_type(const Poset& p, const DimensionVector& d) {
    return !dominated_critical(p, d).has_value();
}

inline constexpr std::uint64_t default_scan_budget = 10'000'000;

/// Exhaustively checks Q(d') > 0 for every nonzero 0 ≤ d' ≤ d.
inline bool finite_type_scan(const Poset& p, const DimensionVector& d, std::uint64_t budget = default_scan_budget) {
    detail::check_shape(p, d);
    if (!d.is_nonnegative()) throw Error(ErrorCode::InvalidInput, "finite_type_scan needs a non-negative vector");
    std::uint64_t count = static_cast<std::uint64_t>(d.d0) + 1;
    for (auto v : d.values) {
        count *= static_cast<std::uint64_t>(v) + 1;
        if (count > budget) throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " subvectors");
    }
    const std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (p.less(a, b)) rel.emplace_back(a, b);
    DimensionVector x = DimensionVector::zero(n);
    while (true) {
        // advance odometer over (d0, values)
        std::size_t i = 0;
        for (; i <= n; ++i) {
            std::int64_t& digit = i == 0 ? x.d0 : x.values[i - 1];
            std::int64_t limit = i == 0 ? d.d0 : d.values[i - 1];
            if (digit < limit) {
                ++digit;
                break;
            }
            digit = 0;
        }
        if (i > n) return true;
        std::int64_t q = x.d0 * x.d0, s = 0;
        for (std::size_t a = 0; a < n; ++a) {
            q += x[a] * x[a];
            s += x[a];
        }
        q -= x.d0 * s;
        for (auto [a, b] : rel) q += x[a] * x[b];
        if (q <= 0) return false;
    }
}

}  // namespace posetrep

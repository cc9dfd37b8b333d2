#pragma once

// Exhaustive enumeration over GF(p): every block matrix of a given shape,
// grouped into orbits of GL(d0) × (block triangular column group).

#include <cstdint>
#include <vector>

#include "posetrep/decomposition.hpp"

namespace posetrep {

inline constexpr std::uint64_t default_brute_budget = std::uint64_t{1} << 24;

struct OrbitSummary {
    std::vector<MatrixRep<PrimeField>> representatives;  // one per orbit, smallest index
    std::vector<std::uint64_t> orbit_sizes;
    std::uint64_t states = 0;
};

namespace detail {

inline std::size_t gf_rank(std::vector<std::vector<std::uint32_t>> cols, const PrimeField& f) {
    std::size_t r = 0;
    const std::size_t n = cols.empty() ? 0 : cols.front().size();
    for (std::size_t row = 0; row < n && r < cols.size(); ++row) {
        std::size_t sel = r;
        while (sel < cols.size() && cols[sel][row] == 0) ++sel;
        if (sel == cols.size()) continue;
        std::swap(cols[sel], cols[r]);
        auto inv = f.inv(cols[r][row]);
        for (std::size_t k = r + 1; k < cols.size(); ++k) {
            if (cols[k][row] == 0) continue;
            auto factor = f.mul(cols[k][row], inv);
            for (std::size_t i = row; i < n; ++i) cols[k][i] = f.sub(cols[k][i], f.mul(factor, cols[r][i]));
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// Orbits of the matrices of shape d whose block a has columns independent
/// modulo the blocks below a (the representations of dimension exactly d).
inline OrbitSummary enumerate_orbits(const Poset& s, const DimensionVector& d, const PrimeField& f,
                                     std::uint64_t budget = default_brute_budget) {
    if (d.size() != s.size()) throw Error(ErrorCode::InvalidInput, "dimension vector does not match the poset");
    if (!d.is_nonnegative()) throw Error(ErrorCode::InvalidInput, "negative dimension");
    const std::uint32_t p = f.characteristic();
    const std::size_t d0 = static_cast<std::size_t>(d.d0);
    std::vector<std::size_t> owner;  // block of each global column
    std::vector<std::size_t> offset(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
        offset[a] = owner.size();
        for (std::int64_t j = 0; j < d[a]; ++j) owner.push_back(a);
    }
    const std::size_t nc = owner.size();
    const std::size_t n = d0 * nc;
    std::uint64_t states = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (states > budget / p) throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " matrices");
        states *= p;
    }

    std::vector<std::uint64_t> power(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) power[i] = power[i - 1] * p;
    auto decode = [&](std::uint64_t x, std::vector<std::uint32_t>& e) {
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
    };
    auto encode = [&](const std::vector<std::uint32_t>& e) {
        std::uint64_t x = 0;
        for (std::size_t i = n; i-- > 0;) x = x * p + e[i];
        return x;
    };
    auto at = [d0](std::size_t col, std::size_t row) { return col * d0 + row; };

    // generators, as in-place edits of the entry vector
    struct Gen {
        enum Kind { RowAdd, RowScale, ColAdd, ColScale } kind;
        std::size_t i, j;
    };
    std::vector<Gen> gens;
    const std::uint32_t g = f.primitive_root();
    for (std::size_t i = 0; i < d0; ++i)
        for (std::size_t j = 0; j < d0; ++j)
            if (i != j) gens.push_back({Gen::RowAdd, i, j});
    if (p > 2 && d0 > 0) gens.push_back({Gen::RowScale, 0, 0});
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            if (i != j && (owner[i] == owner[j] || s.less(owner[j], owner[i]))) gens.push_back({Gen::ColAdd, i, j});
    if (p > 2)
        for (std::size_t a = 0; a < s.size(); ++a)
            if (d[a] > 0) gens.push_back({Gen::ColScale, offset[a], 0});
    auto apply = [&](const Gen& gen, std::vector<std::uint32_t>& e) {
        switch (gen.kind) {
        case Gen::RowAdd:
            for (std::size_t c = 0; c < nc; ++c) e[at(c, gen.i)] = f.add(e[at(c, gen.i)], e[at(c, gen.j)]);
            break;
        case Gen::RowScale:
            for (std::size_t c = 0; c < nc; ++c) e[at(c, 0)] = f.mul(e[at(c, 0)], g);
            break;
        case Gen::ColAdd:
            for (std::size_t r = 0; r < d0; ++r) e[at(gen.i, r)] = f.add(e[at(gen.i, r)], e[at(gen.j, r)]);
            break;
        case Gen::ColScale:
            for (std::size_t r = 0; r < d0; ++r) e[at(gen.i, r)] = f.mul(e[at(gen.i, r)], g);
            break;
        }
    };

    std::vector<std::vector<std::size_t>> strict_cols(s.size()), cone_cols(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t c = 0; c < nc; ++c) {
            if (s.less(owner[c], a)) strict_cols[a].push_back(c);
            if (s.leq(owner[c], a)) cone_cols[a].push_back(c);
        }
    auto realizes = [&](const std::vector<std::uint32_t>& e) {
        auto gather = [&](const std::vector<std::size_t>& cs) {
            std::vector<std::vector<std::uint32_t>> out;
            for (auto c : cs) out.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(c * d0),
                                               e.begin() + static_cast<std::ptrdiff_t>((c + 1) * d0));
            return out;
        };
        for (std::size_t a = 0; a < s.size(); ++a) {
            if (d[a] == 0) continue;
            if (detail::gf_rank(gather(cone_cols[a]), f) != detail::gf_rank(gather(strict_cols[a]), f) + d[a])
                return false;
        }
        return true;
    };

    OrbitSummary out;
    out.states = states;
    std::vector<bool> seen(states, false);
    std::vector<std::uint32_t> e(n), scratch(n);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < states; ++start) {
        if (seen[start]) continue;
        decode(start, e);
        if (!realizes(e)) continue;
        std::uint64_t size = 0;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            std::uint64_t x = stack.back();
            stack.pop_back();
            ++size;
            decode(x, e);
            for (const auto& gen : gens) {
                scratch = e;
                apply(gen, scratch);
                std::uint64_t y = encode(scratch);
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        decode(start, e);
        std::vector<Matrix<PrimeField>> blocks;
        for (std::size_t a = 0; a < s.size(); ++a) {
            Matrix<PrimeField> m(f, d0, static_cast<std::size_t>(d[a]));
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (std::size_t r = 0; r < d0; ++r) m(r, j) = e[at(offset[a] + j, r)];
            blocks.push_back(std::move(m));
        }
        out.representatives.emplace_back(s, f, d0, std::move(blocks));
        out.orbit_sizes.push_back(size);
    }
    return out;
}

/// Number of isomorphism classes of representations of dimension exactly d.
inline std::size_t count_iso_classes(const Poset& s, const DimensionVector& d, const PrimeField& f,
                                     std::uint64_t budget = default_brute_budget) {
    return enumerate_orbits(s, d, f, budget).representatives.size();
}

/// Pairwise non-isomorphic indecomposable El elements of dimension d.
inline std::vector<MatrixRep<PrimeField>> brute_force_indecomposables(const Poset& s, const DimensionVector& d,
                                                                      const PrimeField& f,
                                                                      std::uint64_t budget = default_brute_budget) {
    std::vector<MatrixRep<PrimeField>> out;
    if (d.d0 == 0) {
        auto supp = d.support();
        if (supp.size() == 1 && d[supp.front()] == 1) out.push_back(special_T(s, f, supp.front()));
        return out;
    }
    for (auto& u : enumerate_orbits(s, d, f, budget).representatives)
        if (is_indecomposable(rho(u)).indecomposable) out.push_back(std::move(u));
    return out;
}

}  // namespace posetrep

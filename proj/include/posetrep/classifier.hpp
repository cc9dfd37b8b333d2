#pragma once

// Finite-type classification, construction of the indecomposable of a root
// dimension by differentiation and integration, and the brute-force harness
// that cross-checks both.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "posetrep/derivation.hpp"
#include "posetrep/enumeration.hpp"
#include "posetrep/tits_form.hpp"

namespace posetrep {

template <ExactField Field>
struct ConstructResult {
    std::optional<MatrixRep<Field>> element;
    bool used_fallback = false;
};

namespace detail {

inline std::string memo_key(const Poset& s, const DimensionVector& d) {
    std::string k;
    for (const auto& l : s.labels()) k += l + ";";
    for (auto [a, b] : s.covers()) k += std::to_string(a) + "<" + std::to_string(b) + ";";
    k += "|" + std::to_string(d.d0);
    for (auto v : d.values) k += "," + std::to_string(v);
    return k;
}

template <ExactField Field>
struct Constructor {
    Field field;
    std::uint64_t budget;
    bool used_fallback = false;
    std::map<std::string, std::optional<MatrixRep<Field>>> memo;

    /// d arbitrary on s; restricts to the support and extends back.
    std::optional<MatrixRep<Field>> on_poset(const Poset& s, const DimensionVector& d) {
        if (tits_value(s, d) != 1) return std::nullopt;
        const ElementSet supp = d.support();
        Poset sub = induced_subposet(s, supp);
        DimensionVector dsub = d.restrict_to(supp);
        const std::string key = memo_key(sub, dsub);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, sincere(sub, dsub)).first;
        if (!it->second) return std::nullopt;
        return extend_to(s, supp, *it->second);
    }

    /// d nonzero on every element of s.
    std::optional<MatrixRep<Field>> sincere(const Poset& s, const DimensionVector& d) {
        if (d.d0 == 0) {
            if (s.size() == 1 && d[0] == 1) return special_T(s, field, 0);
            return std::nullopt;
        }
        if (d.d0 == 1) {
            // Q = 1 forces an antichain with all values 1
            std::vector<Matrix<Field>> blocks(s.size(), Matrix<Field>::identity(field, 1));
            return MatrixRep<Field>(s, field, 1, std::move(blocks));
        }
        for (auto a : s.maximal_elements()) {
            DerivedPoset ctx = derive_poset(s, a);
            for (const auto& dp : subordinate_dimensions(ctx, d)) {
                if (dp.total() >= d.total()) continue;
                if (tits_value(ctx.result, dp) != 1 || !is_finite_type(ctx.result, dp)) continue;
                auto v = on_poset(ctx.result, dp);
                if (!v) continue;
                MatrixRep<Field> u = integrate(*v, ctx);
                if (u.dimension() == d && is_indecomposable(u)) return u;
            }
        }
        if constexpr (std::is_same_v<Field, PrimeField>) {
            used_fallback = true;
            auto found = brute_force_indecomposables(s, d, field, budget);
            if (found.empty()) return std::nullopt;
            return found.front();
        } else {
            throw Error(ErrorCode::FieldTooRestrictive,
                        "recursive construction failed and " + field.spec().name() + " admits no enumeration");
        }
    }
};

}  // namespace detail

/// The indecomposable of dimension d when d is a finite-type root, nothing
/// for other finite-type d.
template <ExactField Field>
ConstructResult<Field> construct_indecomposable(const Poset& s, const DimensionVector& d, const Field& field,
                                                std::uint64_t budget = default_brute_budget) {
    detail::check_shape(s, d);
    if (!d.is_nonnegative()) throw Error(ErrorCode::InvalidInput, "negative dimension");
    if (auto w = dominated_critical(s, d))
        throw Error(ErrorCode::NotFiniteType, "dimension dominates the critical dimension of " +
                                                  std::string(to_string(w->dimension.kind)));
    detail::Constructor<Field> c{field, budget, false, {}};
    auto u = c.on_poset(s, d);
    return {std::move(u), c.used_fallback};
}

struct ClassificationReport {
    DimensionVector dimension;
    bool finite_type = false;
    std::optional<CriticalDomination> witness;
    std::optional<bool> scan_positive;  // criterion (b), when within budget
    std::int64_t tits = 0;
    bool is_root = false;
    std::optional<MatrixRep<PrimeField>> indecomposable;
    std::optional<std::size_t> end_dim;
    std::optional<std::size_t> rep_end_dim;
    std::map<std::string, std::size_t> iso_class_counts;
    std::map<std::string, std::size_t> indecomposable_counts;
    bool used_fallback = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    std::uint64_t enumeration_budget = default_brute_budget;
    std::uint64_t scan_budget = default_scan_budget;
    bool construct = true;
};

/// Runs every check available for one dimension vector.
inline ClassificationReport classify(const Poset& s, const DimensionVector& d, const std::vector<std::uint32_t>& primes,
                                     const VerifyOptions& opt = {}) {
    ClassificationReport r;
    r.dimension = d;
    r.witness = dominated_critical(s, d);
    r.finite_type = !r.witness;
    r.tits = tits_value(s, d);
    r.is_root = r.tits == 1;
    try {
        r.scan_positive = finite_type_scan(s, d, opt.scan_budget);
        if (*r.scan_positive != r.finite_type) r.failures.push_back("criteria (b) and (c) disagree");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        r.notes.push_back("criterion (b) skipped: scan budget");
    }

    std::optional<MatrixRep<PrimeField>> brute;
    for (auto p : primes) {
        PrimeField f(p);
        try {
            auto orbits = enumerate_orbits(s, d, f, opt.enumeration_budget);
            r.iso_class_counts[f.spec().name()] = orbits.representatives.size();
            if (!r.finite_type) continue;
            std::vector<MatrixRep<PrimeField>> indec;
            if (d.d0 == 0) {
                indec = brute_force_indecomposables(s, d, f, opt.enumeration_budget);
            } else {
                for (auto& u : orbits.representatives)
                    if (is_indecomposable(rho(u)).indecomposable) indec.push_back(std::move(u));
            }
            r.indecomposable_counts[f.spec().name()] = indec.size();
            if (!brute && indec.size() == 1) brute = indec.front();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::UndecidableAtBudget) throw;
            r.notes.push_back(f.spec().name() + " enumeration skipped: " + e.what());
        }
    }

    std::optional<std::size_t> first_count;
    bool counts_equal = true;
    for (const auto& [name, n] : r.iso_class_counts) {
        if (first_count && *first_count != n) counts_equal = false;
        first_count = n;
    }

    if (!r.finite_type) {
        if (r.iso_class_counts.size() > 1 && counts_equal)
            r.notes.push_back("oracle inconclusive: class counts agree across the fields tried");
        return r;
    }

    if (!counts_equal) r.failures.push_back("class counts differ across fields");
    const std::size_t expected = r.is_root ? 1 : 0;
    for (const auto& [name, n] : r.indecomposable_counts)
        if (n != expected)
            r.failures.push_back("expected " + std::to_string(expected) + " indecomposables over " + name + ", found " +
                                 std::to_string(n));
    if (!r.is_root) return r;

    if (brute) {
        r.end_dim = el_end_dimension(*brute);
        if (*r.end_dim != 1) r.failures.push_back("El endomorphism space is not one-dimensional");
        if (d.d0 > 0) {
            r.rep_end_dim = rep_end_dimension(rho(*brute));
            if (*r.rep_end_dim != 1) r.failures.push_back("rep endomorphism algebra is not k");
        }
    }
    if (opt.construct && !primes.empty()) {
        PrimeField f(primes.front());
        auto c = construct_indecomposable(s, d, f, opt.enumeration_budget);
        r.used_fallback = c.used_fallback;
        if (!c.element) {
            r.failures.push_back("construction returned nothing for a root");
        } else {
            r.indecomposable = c.element;
            if (!(c.element->dimension() == d)) r.failures.push_back("constructed element has the wrong dimension");
            if (!is_indecomposable(*c.element)) r.failures.push_back("constructed element decomposes");
            if (brute && brute->field() == f && !are_isomorphic(*c.element, *brute))
                r.failures.push_back("constructed element differs from the enumerated one");
            if (!r.end_dim) r.end_dim = el_end_dimension(*c.element);
        }
    }
    return r;
}

/// classify() for every d with |d| ≤ max_total.
inline std::vector<ClassificationReport> verify_main_theorem(const Poset& s, std::int64_t max_total,
                                                             const std::vector<std::uint32_t>& primes,
                                                             const VerifyOptions& opt = {}) {
    std::vector<ClassificationReport> out;
    for (const auto& d : dimensions_up_to(s.size(), max_total)) out.push_back(classify(s, d, primes, opt));
    return out;
}

inline std::size_t failure_count(const std::vector<ClassificationReport>& reports) {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.failures.size();
    return n;
}

}  // namespace posetrep

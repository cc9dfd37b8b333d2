#pragma once

// Finite posets with opaque string labels. The strict order is kept
// transitively closed; every query works on indices assigned in input order.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetrep/errors.hpp"

namespace posetrep {

using ElementSet = std::vector<std::size_t>;  // sorted indices

class Poset {
public:
    Poset() = default;

    /// Builds the transitive closure of `relations` (pairs (a, b) meaning a ≺ b).
    static Poset build(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& relations) {
        Poset p;
        p.labels_ = std::move(elements);
        for (std::size_t i = 0; i < p.labels_.size(); ++i) {
            if (!p.index_.emplace(p.labels_[i], i).second)
                throw Error(ErrorCode::DuplicateLabel, "label '" + p.labels_[i] + "' appears twice");
        }
        p.lt_.assign(p.labels_.size(), std::vector<char>(p.labels_.size(), 0));
        for (const auto& [a, b] : relations) p.lt_[p.index_of(a)][p.index_of(b)] = 1;
        p.close();
        return p;
    }

    /// Same as build, with relations given by index.
    static Poset from_indices(std::vector<std::string> elements,
                              const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
        Poset p;
        p.labels_ = std::move(elements);
        for (std::size_t i = 0; i < p.labels_.size(); ++i) {
            if (!p.index_.emplace(p.labels_[i], i).second)
                throw Error(ErrorCode::DuplicateLabel, "label '" + p.labels_[i] + "' appears twice");
        }
        const std::size_t n = p.labels_.size();
        p.lt_.assign(n, std::vector<char>(n, 0));
        for (const auto& [a, b] : relations) {
            if (a >= n || b >= n) throw Error(ErrorCode::UnknownElement, "relation index out of range");
            p.lt_[a][b] = 1;
        }
        p.close();
        return p;
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw Error(ErrorCode::UnknownElement, "no element '" + label + "'");
        return it->second;
    }

    /// a ≺ b
    bool less(std::size_t a, std::size_t b) const { return lt_[a][b] != 0; }
    /// a ⪯ b
    bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || less(b, a); }

    ElementSet maximal_elements() const {
        ElementSet out;
        for (std::size_t x = 0; x < size(); ++x) {
            bool maximal = true;
            for (std::size_t y = 0; y < size() && maximal; ++y) maximal = !less(x, y);
            if (maximal) out.push_back(x);
        }
        return out;
    }

    bool is_maximal(std::size_t a) const {
        check(a);
        for (std::size_t y = 0; y < size(); ++y)
            if (less(a, y)) return false;
        return true;
    }

    /// {b : b ⪯ a}
    ElementSet lower_cone(std::size_t a) const {
        check(a);
        ElementSet out;
        for (std::size_t b = 0; b < size(); ++b)
            if (leq(b, a)) out.push_back(b);
        return out;
    }

    /// {b : b ≺ a}
    ElementSet strict_lower_cone(std::size_t a) const {
        check(a);
        ElementSet out;
        for (std::size_t b = 0; b < size(); ++b)
            if (less(b, a)) out.push_back(b);
        return out;
    }

    /// {b : a ≺ b}
    ElementSet strict_upper_cone(std::size_t a) const {
        check(a);
        ElementSet out;
        for (std::size_t b = 0; b < size(); ++b)
            if (less(a, b)) out.push_back(b);
        return out;
    }

    /// Elements different from a and comparable with it in neither direction.
    ElementSet incomparables(std::size_t a) const {
        check(a);
        ElementSet out;
        for (std::size_t b = 0; b < size(); ++b)
            if (!comparable(a, b)) out.push_back(b);
        return out;
    }

    /// Hasse diagram edges (a, b): a ≺ b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b) {
                if (!less(a, b)) continue;
                bool direct = true;
                for (std::size_t c = 0; c < size() && direct; ++c) direct = !(less(a, c) && less(c, b));
                if (direct) out.emplace_back(a, b);
            }
        return out;
    }

    std::size_t relation_count() const {
        std::size_t n = 0;
        for (const auto& row : lt_)
            for (char c : row) n += c;
        return n;
    }

    friend bool operator==(const Poset& a, const Poset& b) { return a.labels_ == b.labels_ && a.lt_ == b.lt_; }

private:
    void check(std::size_t a) const {
        if (a >= size()) throw Error(ErrorCode::UnknownElement, "element index " + std::to_string(a) + " out of range");
    }

    void close() {
        const std::size_t n = size();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (lt_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (lt_[k][j]) lt_[i][j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (lt_[i][i]) throw Error(ErrorCode::CycleDetected, "relations force '" + labels_[i] + "' below itself");
    }

    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<char>> lt_;
};

// Standard shapes ---------------------------------------------------------

/// Chain e1 ≺ e2 ≺ ... ≺ en with the given label prefix.
inline Poset chain_poset(std::size_t n, const std::string& prefix = "c") {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(prefix + std::to_string(i + 1));
        if (i) rel.emplace_back(i - 1, i);
    }
    return Poset::from_indices(std::move(labels), rel);
}

/// Primitive poset (n1, ..., ns): disjoint incomparable chains. Chain k uses
/// labels "<letter><i>" with letters a, b, c, ... and i = 1 at the bottom.
/// A chain of length one is labelled by its bare letter.
inline Poset primitive_poset(const std::vector<std::size_t>& lengths) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        std::string letter(1, static_cast<char>('a' + k));
        for (std::size_t i = 0; i < lengths[k]; ++i) {
            labels.push_back(lengths[k] == 1 ? letter : letter + std::to_string(i + 1));
            if (i) rel.emplace_back(labels.size() - 2, labels.size() - 1);
        }
    }
    return Poset::from_indices(std::move(labels), rel);
}

inline Poset antichain_poset(std::size_t n) {
    return primitive_poset(std::vector<std::size_t>(n, 1));
}

// Order combinatorics ------------------------------------------------------

struct Antichain {
    ElementSet members;
    std::size_t size() const { return members.size(); }
};

inline bool is_antichain(const Poset& p, const ElementSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (p.comparable(s[i], s[j])) return false;
    return true;
}

inline bool is_chain(const Poset& p, const ElementSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!p.comparable(s[i], s[j])) return false;
    return true;
}

namespace detail {

/// Maximum matching on the comparability bipartite graph (left x -> right y
/// when x ≺ y), by augmenting paths. match_right[y] = x or npos.
inline std::vector<std::size_t> comparability_matching(const Poset& p) {
    const std::size_t n = p.size();
    constexpr auto npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_right(n, npos);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t x, std::vector<char>& seen) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.less(x, y) || seen[y]) continue;
            seen[y] = 1;
            if (match_right[y] == npos || augment(match_right[y], seen)) {
                match_right[y] = x;
                return true;
            }
        }
        return false;
    };
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<char> seen(n, 0);
        augment(x, seen);
    }
    return match_right;
}

inline void max_antichain_search(const Poset& p, std::size_t next, ElementSet& current, ElementSet& best) {
    if (current.size() + (p.size() - next) <= best.size()) return;
    if (next == p.size()) {
        best = current;
        return;
    }
    bool fits = true;
    for (auto c : current)
        if (p.comparable(c, next)) fits = false;
    if (fits) {
        current.push_back(next);
        max_antichain_search(p, next + 1, current, best);
        current.pop_back();
    }
    max_antichain_search(p, next + 1, current, best);
}

}  // namespace detail

/// Minimum partition into chains (each chain listed bottom to top). Its size
/// equals the width by Dilworth's theorem.
inline std::vector<ElementSet> chain_cover(const Poset& p) {
    constexpr auto npos = static_cast<std::size_t>(-1);
    auto match_right = detail::comparability_matching(p);
    std::vector<std::size_t> next(p.size(), npos);
    for (std::size_t y = 0; y < p.size(); ++y)
        if (match_right[y] != npos) next[match_right[y]] = y;
    std::vector<ElementSet> chains;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (match_right[x] != npos) continue;  // x has a predecessor in its chain
        ElementSet chain;
        for (std::size_t cur = x; cur != npos; cur = next[cur]) chain.push_back(cur);
        chains.push_back(std::move(chain));
    }
    return chains;
}

/// Maximum antichain. Exhaustive branch-and-bound for up to 20 elements;
/// larger posets use the König cover of the comparability matching.
inline Antichain width(const Poset& p) {
    if (p.size() <= 20) {
        ElementSet current, best;
        detail::max_antichain_search(p, 0, current, best);
        return {best};
    }
    constexpr auto npos = static_cast<std::size_t>(-1);
    const std::size_t n = p.size();
    auto match_right = detail::comparability_matching(p);
    std::vector<std::size_t> match_left(n, npos);
    for (std::size_t y = 0; y < n; ++y)
        if (match_right[y] != npos) match_left[match_right[y]] = y;
    // Alternating reachability from unmatched left vertices.
    std::vector<char> left_seen(n, 0), right_seen(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t x = 0; x < n; ++x)
        if (match_left[x] == npos) {
            left_seen[x] = 1;
            stack.push_back(x);
        }
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.less(x, y) || right_seen[y]) continue;
            right_seen[y] = 1;
            auto x2 = match_right[y];
            if (x2 != npos && !left_seen[x2]) {
                left_seen[x2] = 1;
                stack.push_back(x2);
            }
        }
    }
    // Cover = (left not seen) ∪ (right seen); antichain = elements in neither side.
    ElementSet members;
    for (std::size_t x = 0; x < n; ++x)
        if (left_seen[x] && !right_seen[x]) members.push_back(x);
    return {members};
}

inline Poset induced_subposet(const Poset& p, const ElementSet& subset) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (auto s : subset) {
        if (s >= p.size()) throw Error(ErrorCode::UnknownElement, "subset index out of range");
        labels.push_back(p.label(s));
    }
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            if (p.less(subset[i], subset[j])) rel.emplace_back(i, j);
    return Poset::from_indices(std::move(labels), rel);
}

struct Semidecomposition {
    ElementSet upper;   // S1
    ElementSet lower;   // S2, every element below every element of S1
    ElementSet chain;   // S3
};

/// Looks for S = S1 ⊔ S2 ⊔ S3 with S3 a chain, S1, S2 nonempty and b ≺ a for
/// all a ∈ S1, b ∈ S2. Chains S3 are tried by size, then lexicographically.
/// For a fixed S3 the smallest admissible S1 is the closure of the maximal
/// elements of the rest under "not below some member of S1".
inline std::optional<Semidecomposition> is_semidecomposable(const Poset& p) {
    const std::size_t n = p.size();
    auto try_chain = [&](const ElementSet& chain) -> std::optional<Semidecomposition> {
        std::vector<char> in_chain(n, 0);
        for (auto c : chain) in_chain[c] = 1;
        ElementSet rest;
        for (std::size_t x = 0; x < n; ++x)
            if (!in_chain[x]) rest.push_back(x);
        if (rest.size() < 2) return std::nullopt;
        std::vector<char> upper(n, 0);
        for (auto x : rest) {
            bool top = true;
            for (auto y : rest) top = top && !p.less(x, y);
            if (top) upper[x] = 1;
        }
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto x : rest) {
                if (upper[x]) continue;
                for (auto s : rest)
                    if (upper[s] && !p.less(x, s)) {
                        upper[x] = 1;
                        grew = true;
                        break;
                    }
            }
        }
        Semidecomposition out;
        for (auto x : rest) (upper[x] ? out.upper : out.lower).push_back(x);
        out.chain = chain;
        if (out.lower.empty()) return std::nullopt;
        return out;
    };

    ElementSet chain;
    std::optional<Semidecomposition> found;
    std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            found = try_chain(chain);
            return found.has_value();
        }
        for (std::size_t x = start; x < n; ++x) {
            bool ok = true;
            for (auto c : chain) ok = ok && p.comparable(c, x);
            if (!ok) continue;
            chain.push_back(x);
            if (choose(x + 1, remaining - 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    for (std::size_t k = 0; k + 2 <= n; ++k)
        if (choose(0, k)) return found;
    return std::nullopt;
}

}  // namespace posetrep

#pragma once

// The five critical posets (1,1,1,1), (2,2,2), (1,3,3), (1,2,5) and K, and
// enumeration of their induced copies inside a host poset.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "posetrep/poset.hpp"

namespace posetrep {

enum class CriticalKind { A4, T222, T133, T125, K };

inline constexpr std::array<CriticalKind, 5> all_critical_kinds{
    CriticalKind::A4, CriticalKind::T222, CriticalKind::T133, CriticalKind::T125, CriticalKind::K};

constexpr std::string_view to_string(CriticalKind kind) {
    switch (kind) {
    case CriticalKind::A4: return "A4";
    case CriticalKind::T222: return "T222";
    case CriticalKind::T133: return "T133";
    case CriticalKind::T125: return "T125";
    case CriticalKind::K: return "K";
    }
    return "?";
}

inline CriticalKind critical_kind_from_string(std::string_view s) {
    for (auto k : all_critical_kinds)
        if (to_string(k) == s) return k;
    throw Error(ErrorCode::InvalidInput, "unknown critical kind '" + std::string(s) + "'");
}

/// The abstract critical poset. Labels:
///   A4   x1 x2 x3 x4
///   T222 u1≺u2, v1≺v2, w1≺w2
///   T133 s; u1≺u2≺u3; v1≺v2≺v3
///   T125 s; t1≺t2; w1≺...≺w5
///   K    a2≺a1, b2≺b1, b2≺a1, c1≺c2≺c3≺c4
inline const Poset& critical_poset(CriticalKind kind) {
    static const std::array<Poset, 5> posets = [] {
        auto chains = [](std::vector<std::pair<std::string, std::size_t>> spec) {
            std::vector<std::string> labels;
            std::vector<std::pair<std::size_t, std::size_t>> rel;
            for (auto& [name, len] : spec)
                for (std::size_t i = 0; i < len; ++i) {
                    labels.push_back(len == 1 ? name : name + std::to_string(i + 1));
                    if (i) rel.emplace_back(labels.size() - 2, labels.size() - 1);
                }
            return Poset::from_indices(labels, rel);
        };
        Poset k = Poset::build({"a1", "a2", "b1", "b2", "c1", "c2", "c3", "c4"},
                               {{"a2", "a1"}, {"b2", "b1"}, {"b2", "a1"}, {"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}});
        return std::array<Poset, 5>{
            Poset::from_indices({"x1", "x2", "x3", "x4"}, {}),
            chains({{"u", 2}, {"v", 2}, {"w", 2}}),
            chains({{"s", 1}, {"u", 3}, {"v", 3}}),
            chains({{"s", 1}, {"t", 2}, {"w", 5}}),
            k,
        };
    }();
    return posets[static_cast<std::size_t>(kind)];
}

/// An order isomorphism from a critical poset onto an induced subposet of a
/// host: image[i] is the host index of abstract element i.
struct CriticalEmbedding {
    CriticalKind kind;
    std::vector<std::size_t> image;

    friend bool operator==(const CriticalEmbedding&, const CriticalEmbedding&) = default;
};

/// Whether `image` preserves and reflects the strict order.
inline bool is_order_embedding(const Poset& abstract, const Poset& host, const std::vector<std::size_t>& image) {
    if (image.size() != abstract.size()) return false;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = 0; j < image.size(); ++j) {
            if (i != j && image[i] == image[j]) return false;
            if (abstract.less(i, j) != host.less(image[i], image[j])) return false;
        }
    return true;
}

/// Calls visit(embedding) for every induced copy of `kind` in `host`;
/// stops early when visit returns false.
template <class Visitor>
void for_each_critical_embedding(const Poset& host, CriticalKind kind, std::size_t host_width, Visitor&& visit) {
    const Poset& abstract = critical_poset(kind);
    if (host.size() < abstract.size()) return;
    if (host_width < width(abstract).size()) return;
    std::vector<std::size_t> image;
    std::vector<char> used(host.size(), 0);
    bool stop = false;
    std::function<void()> extend = [&] {
        if (stop) return;
        const std::size_t i = image.size();
        if (i == abstract.size()) {
            if (!visit(CriticalEmbedding{kind, image})) stop = true;
            return;
        }
        for (std::size_t h = 0; h < host.size() && !stop; ++h) {
            if (used[h]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = abstract.less(i, j) == host.less(h, image[j]) && abstract.less(j, i) == host.less(image[j], h);
            if (!ok) continue;
            used[h] = 1;
            image.push_back(h);
            extend();
            image.pop_back();
            used[h] = 0;
        }
    };
    extend();
}

/// Every induced embedding of every critical poset (automorphic copies of the
/// same image are listed separately).
inline std::vector<CriticalEmbedding> critical_subposet_embeddings(const Poset& host) {
    std::vector<CriticalEmbedding> out;
    const std::size_t w = width(host).size();
    for (auto kind : all_critical_kinds)
        for_each_critical_embedding(host, kind, w, [&](const CriticalEmbedding& e) {
            out.push_back(e);
            return true;
        });
    return out;
}

/// True iff the host contains no critical subset.
inline bool is_representation_finite(const Poset& host) {
    const std::size_t w = width(host).size();
    if (w >= 4) return false;
    bool found = false;
    for (auto kind : all_critical_kinds)
        for_each_critical_embedding(host, kind, w, [&](const CriticalEmbedding&) {
            found = true;
            return false;
        });
    return !found;
}

}  // namespace posetrep

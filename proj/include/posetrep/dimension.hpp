#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "posetrep/poset.hpp"

namespace posetrep {

/// A function on S ∪ {0}: d0 is the value at the extra index 0, values[i]
/// the value at poset element i. Entries are allowed to be negative so the
/// quadratic form can be evaluated on arbitrary integer vectors.
struct DimensionVector {
    std::int64_t d0 = 0;
    std::vector<std::int64_t> values;

    static DimensionVector zero(std::size_t n) { return {0, std::vector<std::int64_t>(n, 0)}; }

    std::size_t size() const { return values.size(); }
    std::int64_t operator[](std::size_t i) const { return values[i]; }
    std::int64_t& operator[](std::size_t i) { return values[i]; }

    /// |d|: sum over S ∪ {0}.
    std::int64_t total() const { return std::accumulate(values.begin(), values.end(), d0); }

    ElementSet support() const {
        ElementSet s;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] != 0) s.push_back(i);
        return s;
    }

    bool is_zero() const { return d0 == 0 && support().empty(); }

    /// Nonzero at 0 and at every element.
    bool is_sincere() const { return d0 != 0 && support().size() == values.size(); }

    bool is_nonnegative() const {
        if (d0 < 0) return false;
        for (auto v : values)
            if (v < 0) return false;
        return true;
    }

    /// Pointwise comparison on S ∪ {0}.
    bool dominated_by(const DimensionVector& other) const {
        if (other.values.size() != values.size() || d0 > other.d0) return false;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] > other.values[i]) return false;
        return true;
    }

    /// Restriction to the listed elements, in that order.
    DimensionVector restrict_to(const ElementSet& subset) const {
        DimensionVector r{d0, {}};
        for (auto s : subset) r.values.push_back(values.at(s));
        return r;
    }

    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;
};

/// All non-negative d on a poset of n elements with |d| <= max_total, in
/// lexicographic order of (d0, values).
inline std::vector<DimensionVector> dimensions_up_to(std::size_t n, std::int64_t max_total) {
    std::vector<DimensionVector> out;
    DimensionVector d = DimensionVector::zero(n);
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t left) {
        if (i == n) {
            out.push_back(d);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            d.values[i] = v;
            fill(i + 1, left - v);
        }
        d.values[i] = 0;
    };
    for (std::int64_t d0 = 0; d0 <= max_total; ++d0) {
        d.d0 = d0;
        fill(0, max_total - d0);
    }
    return out;
}

}  // namespace posetrep

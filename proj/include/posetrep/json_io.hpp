#pragma once

// JSON codecs for posets, dimension vectors, representations, derived
// posets and reports. Objects serialize with sorted keys, so dump() output
// is canonical.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posetrep/classifier.hpp"

namespace posetrep::json_io {

using nlohmann::json;

namespace detail {

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::InvalidInput, std::string("missing key '") + key + "'");
    return j.at(key);
}

inline std::int64_t as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw Error(ErrorCode::InvalidInput, what + " must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace detail

// Posets -------------------------------------------------------------------

/// {"elements": [...], "relations": [[a, b], ...]} with covering relations.
inline json to_json(const Poset& p) {
    json rel = json::array();
    for (auto [a, b] : p.covers()) rel.push_back({p.label(a), p.label(b)});
    return {{"elements", p.labels()}, {"relations", rel}};
}

inline Poset poset_from_json(const json& j) {
    const json& els = detail::require(j, "elements");
    if (!els.is_array()) throw Error(ErrorCode::InvalidInput, "'elements' must be an array");
    std::vector<std::string> labels;
    for (const auto& e : els) {
        if (!e.is_string()) throw Error(ErrorCode::InvalidInput, "element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> rel;
    if (j.contains("relations")) {
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
                throw Error(ErrorCode::InvalidInput, "each relation must be a pair of labels");
            rel.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
        }
    }
    return Poset::build(std::move(labels), rel);
}

// Dimension vectors ----------------------------------------------------------

/// {"0": d0, label: value, ...}, zero entries omitted.
inline json to_json(const Poset& p, const DimensionVector& d) {
    json j = json::object();
    if (d.d0 != 0) j["0"] = d.d0;
    for (std::size_t a = 0; a < p.size(); ++a)
        if (d[a] != 0) j[p.label(a)] = d[a];
    return j;
}

inline DimensionVector dimension_from_json(const Poset& p, const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "dimension vector must be an object");
    DimensionVector d = DimensionVector::zero(p.size());
    for (const auto& [key, value] : j.items()) {
        std::int64_t v = detail::as_int(value, "dimension entry '" + key + "'");
        if (v < 0) throw Error(ErrorCode::InvalidInput, "dimension entry '" + key + "' is negative");
        if (key == "0")
            d.d0 = v;
        else
            d[p.index_of(key)] = v;
    }
    return d;
}

// Fields and entries -------------------------------------------------------

inline json to_json(const FieldSpec& f) {
    if (f.is_prime()) return {{"p", f.p}};
    return "Q";
}

inline FieldSpec field_spec_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
    if (j.is_object() && j.contains("p")) {
        std::int64_t p = detail::as_int(j.at("p"), "field characteristic");
        if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime_number(static_cast<std::uint64_t>(p)))
            throw Error(ErrorCode::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
        return FieldSpec::prime(static_cast<std::uint32_t>(p));
    }
    throw Error(ErrorCode::InvalidInput, "field must be {\"p\": prime} or \"Q\"");
}

/// "Q", a prime, or "GF(p)".
inline FieldSpec field_spec_from_string(const std::string& s) {
    if (s == "Q" || s == "q") return FieldSpec::rationals();
    std::string digits = s;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
    try {
        std::size_t used = 0;
        long long p = std::stoll(digits, &used);
        if (used == digits.size() && p >= 2 && p < (1LL << 31) && is_prime_number(static_cast<std::uint64_t>(p)))
            return FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidInput, "field '" + s + "' is neither Q nor a prime");
}

inline json entry_to_json(const PrimeField&, PrimeField::Element e) { return e; }

inline json entry_to_json(const RationalField& f, const RationalField::Element& e) { return f.to_string(e); }

inline PrimeField::Element entry_from_json(const PrimeField& f, const json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) {
        RationalField q;
        auto v = q.parse(j.get<std::string>());
        auto num = boost::multiprecision::numerator(v) % f.characteristic();
        auto den = boost::multiprecision::denominator(v) % f.characteristic();
        return f.mul(f.from_int(num.convert_to<std::int64_t>()), f.inv(f.from_int(den.convert_to<std::int64_t>())));
    }
    throw Error(ErrorCode::InvalidInput, "matrix entries must be integers or \"a/b\" strings");
}

inline RationalField::Element entry_from_json(const RationalField& f, const json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw Error(ErrorCode::InvalidInput, "matrix entries must be integers or \"a/b\" strings");
}

template <ExactField Field>
json to_json(const Matrix<Field>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m.field(), m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <ExactField Field>
Matrix<Field> matrix_from_json(const Field& f, const json& j, std::size_t rows, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw Error(ErrorCode::InvalidInput, what + " must have " + std::to_string(rows) + " rows");
    std::size_t cols = rows ? j.front().size() : 0;
    Matrix<Field> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorCode::InvalidInput, what + " is ragged");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry_from_json(f, j[i][c]);
    }
    return m;
}

// Representations ----------------------------------------------------------

/// {"field": ..., "d0": n, "blocks": {label: rows}}; blocks without columns
/// are omitted. With d0 = 0 the column counts go in "cols".
template <ExactField Field>
json to_json(const MatrixRep<Field>& u) {
    json blocks = json::object(), cols = json::object();
    for (std::size_t a = 0; a < u.poset().size(); ++a) {
        if (u.columns(a) == 0) continue;
        blocks[u.poset().label(a)] = to_json(u.block(a));
        cols[u.poset().label(a)] = u.columns(a);
    }
    json j = {{"field", to_json(u.field().spec())}, {"d0", u.d0()}, {"blocks", blocks}};
    if (u.d0() == 0) j["cols"] = cols;
    return j;
}

/// Field spec stored in a representation document.
inline FieldSpec representation_field(const json& j) { return field_spec_from_json(detail::require(j, "field")); }

template <ExactField Field>
MatrixRep<Field> representation_from_json(const Poset& p, const Field& f, const json& j) {
    if (!(representation_field(j) == f.spec()))
        throw Error(ErrorCode::FieldMismatch, "representation is over " + representation_field(j).name() + ", expected " +
                                                  f.spec().name());
    std::int64_t d0 = detail::as_int(detail::require(j, "d0"), "d0");
    if (d0 < 0) throw Error(ErrorCode::InvalidInput, "d0 is negative");
    auto blocks = MatrixRep<Field>::zero(p, f, static_cast<std::size_t>(d0)).blocks();
    if (j.contains("blocks"))
        for (const auto& [label, rows] : j.at("blocks").items())
            blocks[p.index_of(label)] = matrix_from_json(f, rows, static_cast<std::size_t>(d0), "block '" + label + "'");
    if (d0 == 0 && j.contains("cols"))
        for (const auto& [label, n] : j.at("cols").items()) {
            std::int64_t c = detail::as_int(n, "column count");
            if (c < 0) throw Error(ErrorCode::InvalidInput, "negative column count");
            blocks[p.index_of(label)] = Matrix<Field>(f, 0, static_cast<std::size_t>(c));
        }
    return MatrixRep<Field>(p, f, static_cast<std::size_t>(d0), std::move(blocks));
}

// Derived posets -------------------------------------------------------------

inline json to_json(const DerivedPoset& ctx) {
    json j = to_json(ctx.result);
    j["base"] = to_json(ctx.base);
    j["pivot"] = ctx.base.label(ctx.pivot);
    json pairs = json::array();
    for (std::size_t k = 0; k < ctx.pairs.size(); ++k)
        pairs.push_back({{"label", ctx.result.label(ctx.result_of_pair(k))},
                         {"first", ctx.base.label(ctx.pairs[k].first)},
                         {"second", ctx.base.label(ctx.pairs[k].second)}});
    j["pairs"] = pairs;
    return j;
}

/// Rebuilds S^a from base and pivot and applies the stored p′/p″ marking.
inline DerivedPoset derived_from_json(const json& j) {
    Poset base = poset_from_json(detail::require(j, "base"));
    const json& pivot = detail::require(j, "pivot");
    if (!pivot.is_string()) throw Error(ErrorCode::InvalidInput, "'pivot' must be a label");
    DerivedPoset ctx = derive_poset(base, pivot.get<std::string>());
    if (j.contains("pairs")) {
        const json& pairs = j.at("pairs");
        if (!pairs.is_array() || pairs.size() != ctx.pairs.size())
            throw Error(ErrorCode::ContextMismatch, "stored pairs do not match the derived poset");
        for (const auto& pj : pairs) {
            std::size_t b = base.index_of(detail::require(pj, "first").get<std::string>());
            std::size_t c = base.index_of(detail::require(pj, "second").get<std::string>());
            bool found = false;
            for (auto& p : ctx.pairs)
                if ((p.first == b && p.second == c) || (p.first == c && p.second == b)) {
                    p = {b, c};
                    found = true;
                }
            if (!found) throw Error(ErrorCode::ContextMismatch, "stored pair is not in Π(a)");
        }
    }
    if (j.contains("elements") && !(poset_from_json(j) == ctx.result))
        throw Error(ErrorCode::ContextMismatch, "stored derived poset differs from the recomputed one");
    return ctx;
}

// Reports ---------------------------------------------------------------------

inline json to_json(const Poset& host, const CriticalDomination& w) {
    const Poset& abstract = critical_poset(w.dimension.kind);
    json emb = json::object(), values = json::object();
    for (std::size_t i = 0; i < w.embedding.image.size(); ++i) {
        emb[abstract.label(i)] = host.label(w.embedding.image[i]);
        values[host.label(w.embedding.image[i])] = w.dimension.values[i];
    }
    return {{"kind", std::string(to_string(w.dimension.kind))}, {"c0", w.dimension.c0}, {"embedding", emb}, {"values", values}};
}

inline json to_json(const Poset& p, const ClassificationReport& r) {
    json j = {{"dimension", to_json(p, r.dimension)},
              {"finite_type", r.finite_type},
              {"tits_value", r.tits},
              {"is_root", r.is_root},
              {"iso_class_counts", r.iso_class_counts},
              {"indecomposable_counts", r.indecomposable_counts},
              {"used_fallback", r.used_fallback},
              {"failures", r.failures},
              {"notes", r.notes}};
    if (r.witness) j["witness"] = to_json(p, *r.witness);
    if (r.scan_positive) j["scan_positive"] = *r.scan_positive;
    if (r.end_dim) j["end_dim"] = *r.end_dim;
    if (r.rep_end_dim) j["rep_end_dim"] = *r.rep_end_dim;
    if (r.indecomposable) j["indecomposable"] = to_json(*r.indecomposable);
    return j;
}

}  // namespace posetrep::json_io

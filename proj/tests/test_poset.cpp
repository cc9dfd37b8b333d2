#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"

using namespace posetrep;

namespace {

ElementSet ids(const Poset& p, std::initializer_list<const char*> names) {
    ElementSet out;
    for (auto n : names) out.push_back(p.index_of(n));
    std::sort(out.begin(), out.end());
    return out;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidInput;
}

const Poset& kp() { return critical_poset(CriticalKind::K); }

}  // namespace

TEST(Build, SingletonAndClosure) {
    Poset one = Poset::build({"x"}, {});
    EXPECT_EQ(one.size(), 1u);
    EXPECT_EQ(one.relation_count(), 0u);

    Poset c = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    EXPECT_TRUE(c.less(c.index_of("a"), c.index_of("c")));
    EXPECT_EQ(c.relation_count(), 3u);
}

TEST(Build, Errors) {
    EXPECT_EQ(code_of([] { Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }),
              ErrorCode::CycleDetected);
    EXPECT_EQ(code_of([] { Poset::build({"a", "a"}, {}); }), ErrorCode::DuplicateLabel);
    EXPECT_EQ(code_of([] { Poset::build({"a"}, {{"a", "z"}}); }), ErrorCode::UnknownElement);
    EXPECT_EQ(code_of([] { Poset::build({"a"}, {{"a", "a"}}); }), ErrorCode::CycleDetected);
}

TEST(Queries, MaximalElements) {
    Poset c = chain_poset(3);
    EXPECT_EQ(c.maximal_elements(), ElementSet{2});
    EXPECT_EQ(antichain_poset(4).maximal_elements().size(), 4u);
    EXPECT_EQ(kp().maximal_elements(), ids(kp(), {"a1", "b1", "c4"}));
}

TEST(Queries, Cones) {
    Poset c = chain_poset(3);
    EXPECT_EQ(c.lower_cone(2), (ElementSet{0, 1, 2}));
    EXPECT_EQ(c.strict_lower_cone(2), (ElementSet{0, 1}));
    Poset a = antichain_poset(3);
    EXPECT_EQ(a.lower_cone(1), ElementSet{1});
    EXPECT_TRUE(a.strict_lower_cone(1).empty());
    EXPECT_EQ(kp().lower_cone(kp().index_of("a1")), ids(kp(), {"a1", "a2", "b2"}));
    EXPECT_EQ(code_of([&] { c.lower_cone(7); }), ErrorCode::UnknownElement);
}

TEST(Queries, Incomparables) {
    EXPECT_TRUE(chain_poset(4).incomparables(1).empty());
    EXPECT_EQ(kp().incomparables(kp().index_of("a1")), ids(kp(), {"b1", "c1", "c2", "c3", "c4"}));
    EXPECT_EQ(antichain_poset(4).incomparables(0), (ElementSet{1, 2, 3}));
}

TEST(Queries, ConePartition) {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        Poset p = oracle::random_poset(7, 0.3, rng);
        for (std::size_t a = 0; a < p.size(); ++a) {
            std::set<std::size_t> all;
            for (auto x : p.lower_cone(a)) all.insert(x);
            for (auto x : p.incomparables(a)) EXPECT_TRUE(all.insert(x).second);
            for (auto x : p.strict_upper_cone(a)) EXPECT_TRUE(all.insert(x).second);
            EXPECT_EQ(all.size(), p.size());
        }
    }
}

TEST(Width, Examples) {
    EXPECT_EQ(width(chain_poset(5)).size(), 1u);
    EXPECT_EQ(width(antichain_poset(4)).size(), 4u);
    auto w = width(kp());
    EXPECT_EQ(w.size(), 3u);
    EXPECT_TRUE(is_antichain(kp(), w.members));
}

TEST(ChainCover, Examples) {
    EXPECT_EQ(chain_cover(antichain_poset(4)).size(), 4u);
    EXPECT_EQ(chain_cover(chain_poset(4)).size(), 1u);
    auto cover = chain_cover(kp());
    ASSERT_EQ(cover.size(), 3u);
    std::set<ElementSet> got;
    for (auto c : cover) {
        std::sort(c.begin(), c.end());
        got.insert(c);
    }
    std::set<ElementSet> want{ids(kp(), {"a1", "a2"}), ids(kp(), {"b1", "b2"}), ids(kp(), {"c1", "c2", "c3", "c4"})};
    EXPECT_EQ(got, want);
}

TEST(Width, DilworthAgainstExhaustiveSearch) {
    auto check = [](const Poset& p) {
        auto w = width(p);
        ASSERT_TRUE(is_antichain(p, w.members));
        EXPECT_EQ(w.size(), oracle::exhaustive_width(p));
        auto cover = chain_cover(p);
        EXPECT_EQ(cover.size(), w.size());
        std::vector<int> hit(p.size(), 0);
        for (const auto& c : cover) {
            EXPECT_TRUE(is_chain(p, c));
            for (auto x : c) ++hit[x];
        }
        for (auto h : hit) EXPECT_EQ(h, 1);
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& p : oracle::all_posets(n)) check(p);
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) check(oracle::random_poset(6 + t % 3, 0.15 + 0.1 * (t % 5), rng));
}

TEST(Induced, Examples) {
    Poset c = induced_subposet(kp(), ids(kp(), {"c1", "c2", "c3", "c4"}));
    EXPECT_EQ(oracle::canonical_form(c), oracle::canonical_form(chain_poset(4)));
    Poset a = induced_subposet(kp(), ids(kp(), {"a2", "b2", "c1"}));
    EXPECT_EQ(a.relation_count(), 0u);
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(induced_subposet(kp(), {}).size(), 0u);
}

TEST(Critical, TablePosets) {
    EXPECT_EQ(critical_poset(CriticalKind::A4).size(), 4u);
    EXPECT_EQ(critical_poset(CriticalKind::T222).size(), 6u);
    EXPECT_EQ(critical_poset(CriticalKind::T133).size(), 7u);
    EXPECT_EQ(critical_poset(CriticalKind::T125).size(), 8u);
    const Poset& k = kp();
    EXPECT_EQ(k.size(), 8u);
    EXPECT_TRUE(k.less(k.index_of("a2"), k.index_of("a1")));
    EXPECT_TRUE(k.less(k.index_of("b2"), k.index_of("b1")));
    EXPECT_TRUE(k.less(k.index_of("b2"), k.index_of("a1")));
    EXPECT_FALSE(k.comparable(k.index_of("a2"), k.index_of("b1")));
    EXPECT_TRUE(k.less(k.index_of("c1"), k.index_of("c4")));
    for (auto kind : all_critical_kinds)
        EXPECT_FALSE(is_representation_finite(critical_poset(kind))) << to_string(kind);
}

TEST(Critical, PrimitiveOneTwoFive) {
    Poset p = primitive_poset({1, 2, 5});
    auto emb = critical_subposet_embeddings(p);
    ASSERT_EQ(emb.size(), 1u);
    EXPECT_EQ(emb[0].kind, CriticalKind::T125);
    std::vector<std::size_t> identity{0, 1, 2, 3, 4, 5, 6, 7};
    EXPECT_EQ(emb[0].image, identity);
}

TEST(Critical, ChainHasNone) {
    EXPECT_TRUE(critical_subposet_embeddings(chain_poset(6)).empty());
    EXPECT_TRUE(is_representation_finite(chain_poset(6)));
}

TEST(Critical, TwoTwoThreeDropsOneElement) {
    Poset p = primitive_poset({2, 2, 3});
    auto emb = critical_subposet_embeddings(p);
    // 3 choices of the dropped element times 3! chain permutations
    EXPECT_EQ(emb.size(), 18u);
    std::set<ElementSet> images;
    for (const auto& e : emb) {
        EXPECT_EQ(e.kind, CriticalKind::T222);
        ElementSet img = e.image;
        std::sort(img.begin(), img.end());
        EXPECT_EQ(img.size(), 6u);
        images.insert(img);
    }
    EXPECT_EQ(images.size(), 3u);
}

TEST(Critical, AgreesWithExhaustiveInducedScan) {
    auto check = [](const Poset& p) {
        auto emb = critical_subposet_embeddings(p);
        for (const auto& e : emb) EXPECT_TRUE(oracle::same_order(critical_poset(e.kind), p, e.image));
        bool oracle_found = false;
        for (auto kind : all_critical_kinds) oracle_found = oracle_found || oracle::contains_induced_copy(p, critical_poset(kind));
        EXPECT_EQ(!emb.empty(), oracle_found);
        EXPECT_EQ(is_representation_finite(p), !oracle_found);
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& p : oracle::all_posets(n)) check(p);
    std::mt19937 rng(9);
    for (int t = 0; t < 150; ++t) check(oracle::random_poset(6 + t % 3, 0.05 + 0.05 * (t % 6), rng));
    check(kp());
    check(primitive_poset({1, 3, 3}));
    check(primitive_poset({1, 2, 4}));
}

TEST(Semidecomposable, TwoChain) {
    Poset c = chain_poset(2);
    auto s = is_semidecomposable(c);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->upper, ElementSet{1});
    EXPECT_EQ(s->lower, ElementSet{0});
    EXPECT_TRUE(s->chain.empty());
}

TEST(Semidecomposable, TwoAntichain) { EXPECT_FALSE(is_semidecomposable(antichain_poset(2)).has_value()); }

TEST(Semidecomposable, ThreeChainsWithCrossRelations) {
    Poset p = Poset::build({"a", "a2", "b", "b2", "b3", "c"},
                           {{"a2", "a"}, {"b3", "b2"}, {"b2", "b"}, {"a2", "b2"}, {"b3", "a"}});
    auto s = is_semidecomposable(p);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->upper, ids(p, {"a", "b", "b2"}));
    EXPECT_EQ(s->lower, ids(p, {"a2", "b3"}));
    EXPECT_EQ(s->chain, ids(p, {"c"}));
}

TEST(Semidecomposable, WitnessesSatisfyDefinition) {
    std::mt19937 rng(21);
    for (int t = 0; t < 200; ++t) {
        Poset p = oracle::random_poset(6, 0.3, rng);
        auto s = is_semidecomposable(p);
        if (!s) continue;
        EXPECT_FALSE(s->upper.empty());
        EXPECT_FALSE(s->lower.empty());
        EXPECT_TRUE(is_chain(p, s->chain));
        for (auto a : s->upper)
            for (auto b : s->lower) EXPECT_TRUE(p.less(b, a));
        EXPECT_EQ(s->upper.size() + s->lower.size() + s->chain.size(), p.size());
    }
}

TEST(Semidecomposable, ExistenceMatchesPartitionScan) {
    auto exhaustive = [](const Poset& p) {
        const std::size_t n = p.size();
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            ElementSet part[3];
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= 3) part[c % 3].push_back(i);
            if (part[0].empty() || part[1].empty() || !is_chain(p, part[2])) continue;
            bool ok = true;
            for (auto a : part[0])
                for (auto b : part[1]) ok = ok && p.less(b, a);
            if (ok) return true;
        }
        return false;
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& p : oracle::all_posets(n)) EXPECT_EQ(is_semidecomposable(p).has_value(), exhaustive(p));
}

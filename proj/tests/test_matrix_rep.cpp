#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace posetrep;

namespace {

const PrimeField gf2(2), gf3(3);
const RationalField qq;

template <class F>
Matrix<F> mat(const F& f, const std::vector<std::vector<std::int64_t>>& rows) {
    return Matrix<F>::from_rows(f, rows);
}

template <class F>
MatrixRep<F> three_lines(const F& f) {
    return {antichain_poset(3), f, 2, {mat(f, {{1}, {0}}), mat(f, {{0}, {1}}), mat(f, {{1}, {1}})}};
}

/// Random order-preserving V on a poset whose index order is a linear extension.
template <class F>
SubspaceRep<F> random_subspace_rep(const Poset& p, const F& f, std::size_t n, std::uint32_t range, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> extra(0, 2);
    std::vector<Matrix<F>> spans;
    for (std::size_t a = 0; a < p.size(); ++a) {
        Matrix<F> s(f, n, 0);
        for (auto b : p.strict_lower_cone(a)) s = hstack(s, spans[b]);
        s = hstack(s, oracle::random_matrix(f, n, extra(rng), range, rng));
        spans.push_back(canonical_column_basis(s));
    }
    return make_subspace_rep(p, f, n, std::move(spans));
}

/// dim of {Φ : Φ0 = 0} computed column by column: each column of u at a maps
/// into the kernel of the stacked target matrix over Δ(a).
template <class F>
std::size_t radical_oracle(const MatrixRep<F>& u, const MatrixRep<F>& v) {
    std::size_t total = 0;
    for (std::size_t a = 0; a < u.poset().size(); ++a) {
        Matrix<F> stacked = v.stacked(u.poset().lower_cone(a));
        total += u.columns(a) * (stacked.cols() - rank(stacked));
    }
    return total;
}

}  // namespace

TEST(Dimension, Examples) {
    auto z = MatrixRep<PrimeField>::zero(chain_poset(2), gf2, 3);
    EXPECT_EQ(dimension_of(z), (DimensionVector{3, {0, 0}}));
    EXPECT_EQ(dimension_of(special_T(chain_poset(2), gf2, 1)), (DimensionVector{0, {0, 1}}));
    EXPECT_EQ(dimension_of(special_E(chain_poset(2), gf2, 0)), (DimensionVector{1, {1, 0}}));
}

TEST(MatrixRepShape, Validation) {
    EXPECT_THROW(MatrixRep<PrimeField>(chain_poset(2), gf2, 2, {mat(gf2, {{1}, {0}})}), Error);
    EXPECT_THROW(MatrixRep<PrimeField>(chain_poset(1), gf2, 2, {mat(gf2, {{1}})}), Error);
}

TEST(Rho, IdentityBlockOnChain) {
    Poset c = chain_poset(3);
    MatrixRep<PrimeField> u(c, gf3, 2, {Matrix<PrimeField>(gf3, 2, 0), Matrix<PrimeField>::identity(gf3, 2),
                                        Matrix<PrimeField>(gf3, 2, 0)});
    auto v = rho(u);
    EXPECT_EQ(v.dim(0), 0u);
    EXPECT_EQ(v.dim(1), 2u);
    EXPECT_EQ(v.dim(2), 2u);
    EXPECT_TRUE(v.is_order_preserving());
}

TEST(Rho, TrivialElementVanishes) {
    auto v = rho(special_T(antichain_poset(2), gf2, 0));
    EXPECT_EQ(v.ambient_dim(), 0u);
    EXPECT_EQ(v.dimension(), (DimensionVector{0, {0, 0}}));
}

TEST(Rho, ThreeLines) {
    auto v = rho(three_lines(gf2));
    EXPECT_TRUE(subspace::equal(v.subspace(0), mat(gf2, {{1}, {0}})));
    EXPECT_TRUE(subspace::equal(v.subspace(1), mat(gf2, {{0}, {1}})));
    EXPECT_TRUE(subspace::equal(v.subspace(2), mat(gf2, {{1}, {1}})));
}

TEST(Lift, Examples) {
    auto zero = SubspaceRep<PrimeField>::zero(chain_poset(2), gf2, 2);
    EXPECT_EQ(lift(zero).total_columns(), 0u);

    auto line = mat(gf2, {{1}, {0}});
    auto v = make_subspace_rep(chain_poset(2), gf2, 2, {line, line});
    auto u = lift(v);
    EXPECT_EQ(u.columns(0), 1u);
    EXPECT_EQ(u.columns(1), 0u);
    EXPECT_EQ(v.dimension(), (DimensionVector{2, {1, 0}}));
}

TEST(Lift, RejectsNonMonotone) {
    EXPECT_THROW(make_subspace_rep(chain_poset(2), gf2, 2, {mat(gf2, {{1}, {0}}), Matrix<PrimeField>(gf2, 2, 0)}),
                 Error);
}

TEST(Lift, DensityRoundTrip) {
    std::mt19937 rng(4);
    for (int t = 0; t < 100; ++t) {
        Poset p = oracle::random_poset(1 + t % 5, 0.35, rng);
        auto v = random_subspace_rep(p, gf3, 1 + t % 4, 3, rng);
        auto u = lift(v);
        EXPECT_EQ(rho(u), v);
        EXPECT_EQ(u.dimension(), v.dimension());
    }
    for (int t = 0; t < 30; ++t) {
        Poset p = oracle::random_poset(1 + t % 4, 0.35, rng);
        auto v = random_subspace_rep(p, qq, 1 + t % 3, 5, rng);
        EXPECT_EQ(rho(lift(v)), v);
    }
}

TEST(Specials, Examples) {
    Poset one = chain_poset(1);
    EXPECT_EQ(special_E(one, gf2, 0).dimension(), (DimensionVector{1, {1}}));
    Poset a3 = antichain_poset(3);
    EXPECT_EQ(special_T0(a3, gf2).dimension(), (DimensionVector{1, {0, 0, 0}}));
    EXPECT_EQ(special_T0(a3, gf2).total_columns(), 0u);
    auto e = special_E_pair(a3, gf2, 0, 1);
    EXPECT_EQ(e.dimension(), (DimensionVector{1, {1, 1, 0}}));
    EXPECT_EQ(e.block(0), mat(gf2, {{1}}));
    EXPECT_THROW(special_E_pair(chain_poset(2), gf2, 0, 1), Error);
}

TEST(DirectSum, Examples) {
    Poset a2 = antichain_poset(2);
    auto u = three_lines(gf3);
    auto zero = MatrixRep<PrimeField>::zero(antichain_poset(3), gf3, 0);
    EXPECT_EQ(direct_sum(u, zero), u);
    auto s = direct_sum(special_E(a2, gf2, 0), special_E(a2, gf2, 1));
    EXPECT_EQ(s.dimension(), (DimensionVector{2, {1, 1}}));
    EXPECT_EQ(s.block(0), mat(gf2, {{1}, {0}}));
    EXPECT_EQ(s.block(1), mat(gf2, {{0}, {1}}));
    EXPECT_EQ(el_end_dimension(u), 1u);
    EXPECT_EQ(el_end_dimension(direct_sum(u, u)), 4u);
    EXPECT_THROW(direct_sum(u, three_lines(gf2)), Error);
}

TEST(ElHom, Examples) {
    Poset a2 = antichain_poset(2);
    auto t = special_T(a2, gf2, 0);
    EXPECT_EQ(el_hom_basis(t, t).size(), 1u);
    auto ex = special_E(a2, gf3, 0), ey = special_E(a2, gf3, 1);
    for (const auto& m : el_hom_basis(ex, ey)) {
        EXPECT_TRUE(m.phi0.is_zero());
        EXPECT_TRUE(is_el_morphism(ex, ey, m));
    }
    EXPECT_THROW(el_hom_basis(ex, special_E(a2, gf2, 1)), Error);
}

TEST(ElHom, SincereIndecomposableAndTrivial) {
    auto u = three_lines(gf2);
    for (std::size_t a = 0; a < 3; ++a) {
        auto t = special_T(u.poset(), gf2, a);
        EXPECT_EQ(el_hom_basis(t, u).size(), 0u);
        for (const auto& m : el_hom_basis(u, t)) EXPECT_TRUE(m.phi0.is_zero());
    }
}

TEST(RepHom, Examples) {
    auto v = rho(three_lines(gf3));
    EXPECT_EQ(rep_end_dimension(v), 1u);
    auto zero = SubspaceRep<PrimeField>::zero(v.poset(), gf3, 0);
    EXPECT_EQ(rep_hom_basis(v, zero).size(), 0u);
    EXPECT_EQ(rep_hom_basis(v, direct_sum(v, v)).size(), 2u);
    EXPECT_EQ(rep_end_dimension(direct_sum(v, v)), 4u);
    for (const auto& f : rep_hom_basis(v, direct_sum(v, v))) EXPECT_TRUE(is_rep_morphism(v, direct_sum(v, v), f));
}

TEST(ElHom, FunctorialityFullnessAndKernel) {
    std::mt19937 rng(8);
    for (int t = 0; t < 80; ++t) {
        const PrimeField& f = t % 2 ? gf3 : gf2;
        Poset p = oracle::random_poset(1 + t % 4, 0.4, rng);
        auto u = oracle::random_rep(p, f, 1 + t % 3, 2, rng);
        auto w = oracle::random_rep(p, f, 1 + (t / 2) % 3, 2, rng);
        auto basis = el_hom_basis(u, w);
        Matrix<PrimeField> images(f, w.d0() * u.d0(), 0);
        for (const auto& m : basis) {
            ASSERT_TRUE(is_el_morphism(u, w, m));
            EXPECT_TRUE(is_rep_morphism(rho(u), rho(w), m.phi0));
            Matrix<PrimeField> col(f, w.d0() * u.d0(), 1);
            for (std::size_t i = 0; i < w.d0(); ++i)
                for (std::size_t k = 0; k < u.d0(); ++k) col(i * u.d0() + k, 0) = m.phi0(i, k);
            images = hstack(images, col);
        }
        EXPECT_EQ(rank(images), rep_hom_basis(rho(u), rho(w)).size());
        EXPECT_EQ(basis.size() - rank(images), radical_oracle(u, w));
        EXPECT_EQ(el_radical_part_dimension(u, w), radical_oracle(u, w));
    }
}

TEST(Indecomposable, Examples) {
    Poset a2 = antichain_poset(2);
    EXPECT_TRUE(is_indecomposable(special_E(a2, gf2, 0)));
    auto s = direct_sum(special_E(a2, gf2, 0), special_E(a2, gf2, 1));
    EXPECT_FALSE(is_indecomposable(s));
    auto r = is_indecomposable(rho(s));
    EXPECT_FALSE(r.indecomposable);
    ASSERT_TRUE(r.idempotent.has_value());
    EXPECT_EQ(*r.idempotent * *r.idempotent, *r.idempotent);
    EXPECT_FALSE(r.idempotent->is_zero());
    EXPECT_NE(*r.idempotent, Matrix<PrimeField>::identity(gf2, 2));
    EXPECT_TRUE(is_indecomposable(three_lines(gf2)));
    EXPECT_TRUE(is_indecomposable(three_lines(qq)));
    EXPECT_TRUE(is_indecomposable(special_T(a2, gf2, 1)));
    EXPECT_FALSE(is_indecomposable(direct_sum(special_T(a2, gf2, 1), special_T(a2, gf2, 1))));
}

TEST(Indecomposable, RationalsWithNonscalarEndomorphisms) {
    Poset a2 = antichain_poset(2);
    auto ex = special_E(a2, qq, 0);
    EXPECT_FALSE(is_indecomposable(direct_sum(ex, ex)));
    // V(x) = V(0) = k^2, V(y) = 0: End is M_2(Q)
    MatrixRep<RationalField> u(a2, qq, 2, {Matrix<RationalField>::identity(qq, 2), Matrix<RationalField>(qq, 2, 0)});
    EXPECT_FALSE(is_indecomposable(u));
}

TEST(Isomorphism, Examples) {
    auto u = three_lines(gf3);
    auto self = are_isomorphic(u, u);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(is_el_isomorphism(u, u, *self));

    MatrixRep<PrimeField> w(antichain_poset(3), gf3, 2, {mat(gf3, {{0}, {1}}), mat(gf3, {{1}, {0}}), mat(gf3, {{1}, {1}})});
    auto m = are_isomorphic(u, w);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_el_isomorphism(u, w, *m));

    Poset a2 = antichain_poset(2);
    EXPECT_FALSE(are_isomorphic(special_E(a2, gf2, 0), special_E(a2, gf2, 1)).has_value());
    EXPECT_THROW(are_isomorphic(u, three_lines(gf2)), Error);
}

TEST(Isomorphism, RandomBaseChanges) {
    std::mt19937 rng(12);
    for (int t = 0; t < 60; ++t) {
        Poset p = oracle::random_poset(1 + t % 4, 0.4, rng);
        auto u = oracle::random_rep(p, gf3, 1 + t % 3, 2, rng);
        Matrix<PrimeField> g(gf3, u.d0(), u.d0());
        do g = oracle::random_matrix(gf3, u.d0(), u.d0(), 3, rng);
        while (!is_invertible(g));
        std::vector<Matrix<PrimeField>> blocks;
        for (std::size_t a = 0; a < p.size(); ++a) blocks.push_back(g * u.block(a));
        MatrixRep<PrimeField> w(p, gf3, u.d0(), std::move(blocks));
        auto m = are_isomorphic(u, w);
        ASSERT_TRUE(m.has_value());
        EXPECT_TRUE(is_el_isomorphism(u, w, *m));
    }
}

TEST(Decompose, Examples) {
    Poset a2 = antichain_poset(2);
    auto ex = special_E(a2, gf2, 0);
    auto d = decompose(direct_sum(ex, ex));
    ASSERT_EQ(d.summands.size(), 2u);
    for (const auto& s : d.summands) EXPECT_TRUE(are_isomorphic(s, ex).has_value());
    EXPECT_EQ(d.trivial, (std::vector<std::size_t>{0, 0}));

    auto mixed = decompose(direct_sum(special_T(a2, gf2, 0), special_E(a2, gf2, 1)));
    EXPECT_EQ(mixed.trivial, (std::vector<std::size_t>{1, 0}));
    ASSERT_EQ(mixed.summands.size(), 1u);
    EXPECT_TRUE(are_isomorphic(mixed.summands[0], special_E(a2, gf2, 1)).has_value());

    auto lifted = decompose(lift(rho(three_lines(gf2))));
    EXPECT_EQ(lifted.trivial, (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(lifted.summands.size(), 1u);
}

TEST(Decompose, KrullSchmidtUnderBaseChange) {
    std::mt19937 rng(13);
    for (int t = 0; t < 60; ++t) {
        Poset p = oracle::random_poset(1 + t % 4, 0.3, rng);
        auto u = oracle::random_rep(p, gf2, 1 + t % 4, 2, rng);
        Matrix<PrimeField> g(gf2, u.d0(), u.d0());
        do g = oracle::random_matrix(gf2, u.d0(), u.d0(), 2, rng);
        while (!is_invertible(g));
        std::vector<Matrix<PrimeField>> blocks;
        for (std::size_t a = 0; a < p.size(); ++a) blocks.push_back(g * u.block(a));
        MatrixRep<PrimeField> w(p, gf2, u.d0(), std::move(blocks));
        auto du = decompose(u), dw = decompose(w);
        EXPECT_EQ(du.trivial, dw.trivial);
        ASSERT_EQ(du.summands.size(), dw.summands.size());
        std::vector<bool> used(dw.summands.size(), false);
        for (const auto& s : du.summands) {
            EXPECT_TRUE(is_indecomposable(s));
            bool hit = false;
            for (std::size_t j = 0; j < dw.summands.size() && !hit; ++j)
                if (!used[j] && are_isomorphic(s, dw.summands[j])) used[j] = hit = true;
            EXPECT_TRUE(hit);
        }
        // summands plus trivial columns reassemble u
        MatrixRep<PrimeField> total = MatrixRep<PrimeField>::zero(p, gf2, 0);
        for (const auto& s : du.summands) total = direct_sum(total, s);
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t k = 0; k < du.trivial[a]; ++k) total = direct_sum(total, special_T(p, gf2, a));
        EXPECT_TRUE(are_isomorphic(total, u).has_value());
    }
}

TEST(QuiteSincere, Examples) {
    EXPECT_TRUE(is_quite_sincere(rho(three_lines(gf2))));
    EXPECT_FALSE(is_quite_sincere(rho(special_E(antichain_poset(2), gf2, 0))));
    Poset a2 = antichain_poset(2);
    auto line_sum = direct_sum(special_E_pair(antichain_poset(3), gf3, 0, 1), special_E(antichain_poset(3), gf3, 2));
    EXPECT_FALSE(is_quite_sincere(rho(line_sum)));
    EXPECT_FALSE(is_quite_sincere(rho(direct_sum(special_E(a2, gf2, 0), special_E(a2, gf2, 1)))));
}

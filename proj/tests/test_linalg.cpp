#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "posetrep/matrix.hpp"
#include "posetrep/subspace.hpp"

using namespace posetrep;

namespace {

const PrimeField gf2(2), gf3(3), gf5(5);
const RationalField qq;

template <class F>
Vector<F> vec(const F& f, std::initializer_list<std::int64_t> xs) {
    Vector<F> v;
    for (auto x : xs) v.push_back(f.from_int(x));
    return v;
}

}  // namespace

TEST(Field, PrimeArithmetic) {
    EXPECT_EQ(gf5.add(3, 4), 2u);
    EXPECT_EQ(gf5.sub(1, 3), 3u);
    EXPECT_EQ(gf5.mul(3, 4), 2u);
    EXPECT_EQ(gf5.mul(3, gf5.inv(3)), 1u);
    EXPECT_EQ(gf5.from_int(-1), 4u);
    EXPECT_THROW(PrimeField(4), Error);
    EXPECT_THROW(PrimeField(1), Error);
}

TEST(Field, RationalsStayExact) {
    using Q = RationalField::Element;
    Q a(7, 3), b(3, 7);
    EXPECT_EQ(qq.mul(a, b), Q(1));
    EXPECT_EQ(qq.to_string(Q(6, 4)), "3/2");
    EXPECT_EQ(qq.parse("-10/4"), Q(-5, 2));
    EXPECT_EQ(qq.parse("3/-6"), Q(-1, 2));
    EXPECT_THROW(qq.parse("1/0"), Error);
    EXPECT_THROW(qq.parse("x"), Error);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        int n = d(rng), m = d(rng);
        if (n == 0 || m == 0) continue;
        EXPECT_EQ(qq.mul(Q(n) / m, Q(m) / n), Q(1));
    }
}

TEST(Rref, Identity) {
    auto r = rref(Matrix<PrimeField>::identity(gf2, 2));
    EXPECT_EQ(r.reduced, Matrix<PrimeField>::identity(gf2, 2));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, ZeroMatrix) {
    Matrix<PrimeField> z(gf3, 2, 3);
    auto r = rref(z);
    EXPECT_EQ(r.reduced, z);
    EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, RepeatedRow) {
    auto r = rref(Matrix<PrimeField>::from_rows(gf2, {{1, 1}, {1, 1}}));
    EXPECT_EQ(r.reduced, Matrix<PrimeField>::from_rows(gf2, {{1, 1}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Nullspace, Examples) {
    EXPECT_TRUE(nullspace_basis(Matrix<PrimeField>::identity(gf2, 3)).empty());
    EXPECT_EQ(nullspace_basis(Matrix<PrimeField>(gf3, 2, 3)).size(), 3u);
    auto b = nullspace_basis(Matrix<PrimeField>::from_rows(gf2, {{1, 1}}));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], vec(gf2, {1, 1}));
}

TEST(ColumnSpace, Contains) {
    auto m = Matrix<PrimeField>::from_rows(gf2, {{1}, {0}});
    EXPECT_TRUE(column_space_contains(m, vec(gf2, {0, 0})));
    EXPECT_FALSE(column_space_contains(m, vec(gf2, {0, 1})));
    EXPECT_TRUE(column_space_contains(Matrix<PrimeField>::from_rows(gf3, {{1}, {1}}), vec(gf3, {2, 2})));
}

TEST(Completion, Examples) {
    auto c = complete_to_full_rank(Matrix<PrimeField>(gf2, 1, 0));
    EXPECT_EQ(c, Matrix<PrimeField>::identity(gf2, 1));
    EXPECT_EQ(complete_to_full_rank(Matrix<PrimeField>::identity(gf3, 3)).cols(), 0u);
    EXPECT_EQ(complete_to_full_rank(Matrix<PrimeField>::from_rows(gf2, {{1}, {0}})),
              Matrix<PrimeField>::from_rows(gf2, {{0}, {1}}));
}

TEST(MatrixOps, Basics) {
    auto m = Matrix<PrimeField>::from_rows(gf5, {{1, 2, 3}, {4, 0, 1}});
    EXPECT_EQ(Matrix<PrimeField>::identity(gf5, 2) * m, m);
    EXPECT_TRUE((m + (-m)).is_zero());
    auto u = Matrix<PrimeField>::from_rows(gf2, {{1, 1}, {0, 1}});
    ASSERT_TRUE(inverse(u).has_value());
    EXPECT_EQ(*inverse(u), u);
    EXPECT_FALSE(inverse(Matrix<PrimeField>::from_rows(gf2, {{1, 1}, {1, 1}})).has_value());
    auto q = Matrix<RationalField>::from_rows(qq, {{2, 1}, {1, 1}});
    EXPECT_EQ(q * *inverse(q), Matrix<RationalField>::identity(qq, 2));
}

template <class F>
void rank_properties(const F& f, std::uint32_t range, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = oracle::random_matrix(f, dim(rng), dim(rng), range, rng);
        EXPECT_EQ(rank(m), rank(m.transpose()));
        EXPECT_EQ(m.cols(), rank(m) + nullspace_basis(m).size());
        for (const auto& v : nullspace_basis(m)) {
            auto mv = m * v;
            for (const auto& e : mv) EXPECT_TRUE(f.is_zero(e));
        }
        auto c = complete_to_full_rank(m);
        EXPECT_EQ(c, complete_to_full_rank(m));
        EXPECT_EQ(rank(hstack(m, c)), m.rows());
        EXPECT_EQ(rank(c), c.cols());
    }
}

TEST(RankProperties, AllFields) {
    std::mt19937 rng(11);
    rank_properties(gf2, 2, rng);
    rank_properties(gf3, 3, rng);
    rank_properties(gf5, 5, rng);
    rank_properties(qq, 7, rng);
}

TEST(Subspace, SumIntersection) {
    auto x = Matrix<PrimeField>::from_rows(gf3, {{1}, {0}, {0}});
    auto y = Matrix<PrimeField>::from_rows(gf3, {{0}, {1}, {0}});
    auto xy = Matrix<PrimeField>::from_rows(gf3, {{1, 0}, {1, 1}, {0, 0}});
    EXPECT_TRUE(subspace::equal(subspace::sum(x, y), xy));
    EXPECT_EQ(subspace::intersection(x, y).cols(), 0u);
    EXPECT_TRUE(subspace::equal(subspace::intersection(xy, x), x));
    EXPECT_TRUE(subspace::contains(xy, y));
    EXPECT_FALSE(subspace::contains(x, xy));
    EXPECT_EQ(subspace::annihilator(xy).rows(), 1u);
}

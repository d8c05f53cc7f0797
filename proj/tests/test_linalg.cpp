#include <gtest/gtest.h>

#include <random>

#include "tautilt/error.hpp"
#include "tautilt/linalg.hpp"

using namespace tautilt;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) + 4) % 3);
    }
    return m;
}

Subspace rows_span(std::vector<std::vector<long long>> rows) { return Subspace::span_of_rows(Matrix::from_ints(rows)); }

}  // namespace

TEST(Rational, LowestTermsAndSign) {
    const Rational q(6, -4);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("x"), ParseError);
}

TEST(Rational, PromotesAndDemotesAcrossTheSmallLimit) {
    Rational big(1LL << 61);
    big *= Rational(1LL << 61);
    EXPECT_FALSE(big.is_small());
    EXPECT_EQ(big.str(), "5316911983139663491615228241121378304");
    big /= Rational(1LL << 61);
    EXPECT_TRUE(big.is_small());
    EXPECT_EQ(big, Rational(1LL << 61));
}

TEST(Rational, InverseIsExact) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int k = 0; k < 200; ++k) {
        const long long a = d(rng);
        const long long b = d(rng);
        if (a == 0 || b == 0) continue;
        EXPECT_TRUE((Rational(a, b) * Rational(b, a)).is_one());
    }
    EXPECT_THROW(Rational(0).inverse(), ContractViolation);
}

TEST(Rref, Identity) {
    const auto r = rref(Matrix::identity(2));
    EXPECT_EQ(r.reduced, Matrix::identity(2));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, ZeroMatrix) {
    const auto r = rref(Matrix(3, 3));
    EXPECT_TRUE(r.reduced.is_zero());
    EXPECT_TRUE(r.pivots.empty());
    EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, RankOneTwoByTwo) {
    const auto r = rref(Matrix::from_ints({{1, 2}, {2, 4}}));
    EXPECT_EQ(r.reduced, Matrix::from_ints({{1, 2}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, IdempotentAndCanonical) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; ++k) {
        const Matrix m = random_matrix(rng, 4, 6);
        const auto r = rref(m);
        EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
        // a random invertible row operation does not change the rref
        Matrix g = random_matrix(rng, 4, 4);
        if (!inverse(g)) continue;
        EXPECT_EQ(rref(g * m).reduced, r.reduced) << m.str() << " g=" << g.str() << " got " << rref(g * m).reduced.str() << " want " << r.reduced.str();
    }
}

TEST(Solve, IdentityReturnsRightHandSide) {
    const Matrix b = Matrix::from_ints({{1, 2}, {3, 4}});
    const auto s = solve_linear(Matrix::identity(2), b);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->particular, b);
    EXPECT_EQ(s->kernel.rows(), 0u);
}

TEST(Solve, UnderdeterminedHasOneDimensionalKernel) {
    const Matrix a = Matrix::from_ints({{1, 1}});
    const auto s = solve_linear(a, Matrix::from_ints({{2}}));
    ASSERT_TRUE(s);
    EXPECT_EQ(a * s->particular, Matrix::from_ints({{2}}));
    ASSERT_EQ(s->kernel.rows(), 1u);
    EXPECT_TRUE((a * s->kernel.transpose()).is_zero());
}

TEST(Solve, InconsistentIsAbsent) {
    EXPECT_FALSE(solve_linear(Matrix::from_ints({{1}, {1}}), Matrix::from_ints({{0}, {1}})));
}

TEST(Solve, ShapeMismatchIsContractViolation) {
    EXPECT_THROW((void)solve_linear(Matrix(2, 2), Matrix(3, 1)), ContractViolation);
}

TEST(Kernel, Examples) {
    EXPECT_TRUE(kernel_basis(Matrix::identity(3)).is_zero());
    EXPECT_TRUE(kernel_basis(Matrix(2, 4)).is_full());
    const Subspace k = kernel_basis(Matrix::from_ints({{1, 2}}));
    EXPECT_EQ(k.dim(), 1u);
    EXPECT_TRUE(k.contains(std::vector<Scalar>{-2, 1}));
}

TEST(Kernel, RankNullity) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 60; ++k) {
        const std::size_t r = 1 + rng() % 5;
        const std::size_t c = 1 + rng() % 6;
        Matrix m = random_matrix(rng, r, c);
        if (k % 3 == 0 && r > 1) m.set_block(r - 1, 0, m.block(0, 0, 1, c));
        const Subspace ker = kernel_basis(m);
        EXPECT_EQ(rank(m) + ker.dim(), c);
        EXPECT_TRUE((m * ker.basis_columns()).is_zero());
    }
}

TEST(Subspaces, Examples) {
    const Subspace u = rows_span({{1, 0, 0}, {0, 1, 0}});
    const Subspace v = rows_span({{0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(intersection(u, v), rows_span({{0, 1, 0}}));
    EXPECT_EQ(sum(u, u), u);
    EXPECT_EQ(intersection(u, u), u);
    const Subspace l1 = rows_span({{1, 1}});
    const Subspace l2 = rows_span({{1, -1}});
    EXPECT_TRUE(sum(l1, l2).is_full());
    EXPECT_TRUE(intersection(l1, l2).is_zero());
    EXPECT_THROW((void)sum(u, l1), ContractViolation);
}

TEST(Subspaces, DimensionFormulaAndComplement) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        const Subspace u = Subspace::span_of_rows(random_matrix(rng, 1 + rng() % 4, 5));
        const Subspace v = Subspace::span_of_rows(random_matrix(rng, 1 + rng() % 4, 5));
        EXPECT_EQ(sum(u, v).dim() + intersection(u, v).dim(), u.dim() + v.dim());
        const Matrix c = complement_rows(u, Subspace::full(5));
        EXPECT_EQ(c.rows() + u.dim(), 5u);
        EXPECT_TRUE(Subspace::span_of_rows(vstack(u.basis(), c)).is_full());
    }
}

TEST(Subspaces, PreimageAndImage) {
    const Matrix a = Matrix::from_ints({{1, 0, 0}, {0, 0, 0}});
    const Subspace s = rows_span({{0, 1}});
    const Subspace pre = preimage(a, s);
    EXPECT_EQ(pre, rows_span({{0, 1, 0}, {0, 0, 1}}));
    EXPECT_EQ(image_of(a), rows_span({{1, 0}}));
    EXPECT_TRUE(image_of(a, pre).is_zero());
}

TEST(Inverse, RoundTrip) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const Matrix m = random_matrix(rng, 4, 4);
        const auto inv = inverse(m);
        if (!inv) {
            EXPECT_LT(rank(m), 4u);
            continue;
        }
        EXPECT_TRUE((m * *inv).is_identity());
    }
    EXPECT_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
}

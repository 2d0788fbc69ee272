#include "adft/adft_matrix.hpp"

#include <random>

#include "gtest/gtest.h"

namespace adft {
namespace {

RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
    long r = 0;
    for (const auto& row : rows) {
        long c = 0;
        for (long v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

RatMatrix a2() { return from_rows({{1, 1}, {1, -1}}); }

RatMatrix random_matrix(long rows, long cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> val(-4, 4);
    RatMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) m.at(r, c) = val(rng);
    return m;
}

TEST(OracleMatrix, SizeTwoWithRationalGenerator) {
    auto theta = CycloElem::from_rational(ring_create(2), 1);
    EXPECT_EQ(adft_matrix_oracle(theta, 2).to_dense(), a2());
}

TEST(OracleMatrix, HartleyGeneratorRawRows) {
    auto ring = ring_create(4);
    CycloElem theta = make_rat(1, 2) * (CycloElem::from_rational(ring, 1) + zeta_power(ring, 1));
    auto m = adft_matrix_oracle(theta, 4);
    EXPECT_TRUE(m.integer_storage());
    EXPECT_EQ(m.to_dense(),
              from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}));
}

TEST(OracleMatrix, MinusZetaThreeIsSlim) {
    auto theta = Rat(-1) * zeta_power(ring_create(3), 1);
    auto m = adft_matrix_oracle(theta, 3);
    for (long k = 0; k < 3; ++k)
        for (long l = 0; l < 3; ++l) {
            Rat v = m.entry(k, l);
            EXPECT_TRUE(v == -1 || v == 0 || v == 1);
        }
}

TEST(OracleMatrix, RejectsNonGenerator) {
    EXPECT_THROW(adft_matrix_oracle(zeta_power(ring_create(4), 1), 4), std::domain_error);
}

TEST(SlimMatrix, EqualsOracleSweep) {
    for (long n : {2L, 3L, 4L, 5L, 8L, 9L, 12L, 16L}) {
        auto slim = adft_matrix_slim(n);
        auto oracle = adft_matrix_oracle(slim_nbg(n).theta, n);
        ASSERT_EQ(slim, oracle) << "n=" << n;
        EXPECT_TRUE(slim.is_slim());
        EXPECT_TRUE(slim.integer_storage());
    }
}

TEST(SlimMatrix, LegendrePatternAtNine) {
    auto m = adft_matrix_slim(9);
    for (long k = 0; k < 9; ++k)
        for (long l = 0; l < 9; ++l) {
            int v = m.integer_entry(k, l);
            EXPECT_TRUE(v == -1 || v == 0 || v == 1);
        }
    EXPECT_EQ(m.integer_entry(1, 4), legendre(1, 3));
    EXPECT_EQ(m.integer_entry(1, 7), legendre(2, 3));
}

TEST(SlimMatrix, SignAntisymmetryForPowersOfTwo) {
    for (long n : {4L, 8L, 16L, 32L, 64L}) {
        auto m = adft_matrix_slim(n);
        for (long s = 0; s < n; ++s)
            ASSERT_EQ(m.value_at(s + n / 2), -m.value_at(s)) << "n=" << n << " s=" << s;
    }
}

TEST(SlimMatrix, ComputesSpectrumAgainstNormalBasis) {
    // (A_n c)_k = Tr(theta* c_hat_k) with c_hat_k the DFT sum in the field.
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<long> val(-5, 5);
    for (long n : {4L, 8L, 12L}) {
        auto ring = ring_create(n);
        CycloElem dual = dual_nbg(slim_nbg(n).theta);
        std::vector<Rat> c(static_cast<std::size_t>(n));
        for (Rat& x : c) x = make_rat(val(rng), 1 + (val(rng) & 3));
        auto out = adft_matrix_slim(n).apply(c);
        for (long k = 0; k < n; ++k) {
            CycloElem hat(ring);
            for (long l = 0; l < n; ++l) hat += c[static_cast<std::size_t>(l)] * zeta_power(ring, k * l);
            ASSERT_EQ(out[static_cast<std::size_t>(k)], trace(dual * hat)) << "n=" << n << " k=" << k;
        }
    }
}

TEST(BasisChange, SizeFourIsButterflyMatrix) {
    auto bc = basis_change_matrix(4);
    EXPECT_EQ(bc.galois_columns, (std::vector<long>{1, 3}));
    EXPECT_EQ(bc.m.to_dense(), a2());
}

TEST(BasisChange, MatchesTraceOracle) {
    for (long n : {8L, 16L}) {
        auto bc = basis_change_matrix(n);
        CycloElem dual = dual_nbg(slim_nbg(n).theta);
        for (long l = 0; l < n / 2; ++l)
            for (std::size_t j = 0; j < bc.galois_columns.size(); ++j) {
                CycloElem conj = galois_apply(dual, bc.galois_columns[j]);
                Rat expected = trace(mul_zeta_power(conj, l));
                ASSERT_EQ(Rat(bc.m.at(l, static_cast<long>(j))), expected)
                    << "n=" << n << " l=" << l << " j=" << j;
            }
    }
}

TEST(BasisChange, FirstRowAllOnes) {
    for (long n : {4L, 8L, 16L, 32L})
        for (long j = 0; j < n / 2; ++j) ASSERT_EQ(basis_change_matrix(n).m.at(0, j), 1);
}

TEST(Residual, IdentityForSlimGenerator) {
    EXPECT_EQ(residual_matrix(4), IntMatrix::identity(1));
    EXPECT_EQ(residual_matrix(8), IntMatrix::identity(2));
    EXPECT_EQ(residual_matrix(16), IntMatrix::identity(4));
}

TEST(Kronecker, PaperFourByFour) {
    EXPECT_EQ(kronecker(a2(), a2()),
              from_rows({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
}

TEST(Kronecker, IdentityNeutral) {
    std::mt19937_64 rng(71);
    RatMatrix b = random_matrix(3, 3, rng);
    EXPECT_EQ(kronecker(RatMatrix::identity(1), b), b);
}

TEST(Kronecker, MixedProductProperty) {
    std::mt19937_64 rng(73);
    RatMatrix a = random_matrix(2, 3, rng), c = random_matrix(3, 2, rng);
    RatMatrix b = random_matrix(2, 2, rng), d = random_matrix(2, 3, rng);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
}

TEST(KroneckerEquivalence, VerifiedPairs) {
    for (auto [n1, n2] : std::vector<std::pair<long, long>>{{3, 4}, {3, 5}, {1, 7}, {4, 5}}) {
        auto eq = kronecker_equivalence(n1, n2);
        RatMatrix lhs = kronecker(adft_matrix_slim(n1).to_dense(), adft_matrix_slim(n2).to_dense());
        EXPECT_EQ(apply_col_perm(apply_row_perm(eq.row, lhs), eq.col),
                  adft_matrix_slim(n1 * n2).to_dense());
    }
    EXPECT_THROW(kronecker_equivalence(4, 6), std::invalid_argument);
}

TEST(PermTest, BijectionChecked) {
    EXPECT_THROW(Perm({0, 0, 1}), std::invalid_argument);
    Perm p({2, 0, 1});
    EXPECT_EQ(p.inverse().image, (std::vector<long>{1, 2, 0}));
}

}  // namespace
}  // namespace adft

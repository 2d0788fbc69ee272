#include "adft/fadft.hpp"

#include <map>
#include <random>

#include "gtest/gtest.h"

namespace adft {
namespace {

std::vector<Rat> random_vector(long n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    std::vector<Rat> v(static_cast<std::size_t>(n));
    for (Rat& x : v) x = make_rat(num(rng), den(rng));
    return v;
}

TEST(ColumnPermutation, KnownImages) {
    EXPECT_EQ(column_permutation(4).image, (std::vector<long>{0, 2, 1, 3}));
    EXPECT_EQ(column_permutation(8).image, (std::vector<long>{0, 2, 4, 6, 1, 3, 5, 7}));
    EXPECT_EQ(column_permutation(16)[10], 13);  // odd block j = 2: inverse of 5 mod 16
    EXPECT_THROW(column_permutation(6), std::invalid_argument);
    EXPECT_THROW(column_permutation(2), std::invalid_argument);
}

TEST(RowPermutationN, KnownImages) {
    EXPECT_EQ(row_permutation_N(8).image, (std::vector<long>{0, 2, 1, 3}));
    EXPECT_EQ(row_permutation_N(4).image, (std::vector<long>{0, 1}));
    EXPECT_EQ(row_permutation_N(16).image, (std::vector<long>{0, 2, 4, 6, 1, 3, 5, 7}));
}

TEST(Plan, AdditionCounts) {
    EXPECT_EQ(plan(1).addition_count, 2);
    EXPECT_EQ(plan(3).addition_count, 22);
    EXPECT_EQ(plan(8).addition_count, 4 * 256 - 2 * 8 - 4);
    for (int t = 2; t <= 16; ++t) {
        const long n = 1L << t;
        auto p = plan(t);
        ASSERT_EQ(p.addition_count, 4 * n - 2 * t - 4) << "t=" << t;
        ASSERT_EQ(p.basechange_count, n - 2) << "t=" << t;
        ASSERT_LE(p.addition_count, 4 * n);
        ASSERT_LE(p.buffer_size, 2 * n);
    }
    EXPECT_THROW(plan(0), std::invalid_argument);
    EXPECT_THROW(plan(21), std::invalid_argument);
    EXPECT_NO_THROW(plan(4, 4));
}

TEST(Execute, StandardBasisVectorGivesMatrixColumn) {
    auto p = plan(3);
    std::vector<Rat> e0(8, Rat(0));
    e0[0] = 1;
    auto out = execute(p, e0);
    for (const Rat& v : out) EXPECT_EQ(v, 1);
}

TEST(Execute, MatchesDenseMultiplyOnRandomVectors) {
    std::mt19937_64 rng(79);
    for (int t = 1; t <= 8; ++t) {
        const long n = 1L << t;
        auto p = plan(t);
        auto matrix = adft_matrix_slim(n);
        for (int rep = 0; rep < 10; ++rep) {
            auto v = random_vector(n, rng);
            ASSERT_EQ(execute(p, v), matrix.apply(v)) << "t=" << t;
        }
    }
}

TEST(Execute, EveryColumnOfEverySizeMatches) {
    for (int t = 1; t <= 6; ++t) {
        const long n = 1L << t;
        auto p = plan(t);
        auto matrix = adft_matrix_slim(n);
        for (long l = 0; l < n; ++l) {
            std::vector<Rat> e(static_cast<std::size_t>(n), Rat(0));
            e[static_cast<std::size_t>(l)] = 1;
            auto out = execute(p, e);
            for (long k = 0; k < n; ++k)
                ASSERT_EQ(out[static_cast<std::size_t>(k)], matrix.entry(k, l))
                    << "t=" << t << " k=" << k << " l=" << l;
        }
    }
}

TEST(Execute, InstrumentedCountMatchesPlan) {
    std::mt19937_64 rng(83);
    for (int t : {1, 2, 3, 5, 8, 12, 16}) {
        auto p = plan(t);
        long executed = 0;
        execute(p, random_vector(p.n, rng), &executed);
        ASSERT_EQ(executed, p.addition_count) << "t=" << t;
    }
}

TEST(Execute, RejectsLengthMismatch) {
    std::vector<Rat> v(3, Rat(1));
    EXPECT_THROW(execute(plan(3), v), std::invalid_argument);
}

TEST(Plan, SizeEightStageStructure) {
    // Layered by dependency depth the schedule must match the drawn
    // structure: a stride-4 butterfly bank, a middle bank of 3 butterflies,
    // and a final bank of 4.
    auto p = plan(3);
    std::map<std::int32_t, int> depth;
    for (std::int32_t i = 0; i < 8; ++i) depth[i] = 0;
    std::map<int, long> ops_per_layer;
    std::vector<std::pair<long, long>> first_layer_pairs;
    for (const auto& stage : p.stages)
        for (const auto& bf : stage) {
            int d = std::max(depth[bf.src_a], depth[bf.src_b]) + 1;
            if (d == 1) first_layer_pairs.push_back({bf.src_a, bf.src_b});
            depth[bf.dst_hi] = depth[bf.dst_lo] = d;
            ops_per_layer[d] += 2;
        }
    EXPECT_EQ(ops_per_layer.at(1), 8);
    EXPECT_EQ(ops_per_layer.at(2), 6);
    EXPECT_EQ(ops_per_layer.at(3), 8);
    std::sort(first_layer_pairs.begin(), first_layer_pairs.end());
    EXPECT_EQ(first_layer_pairs,
              (std::vector<std::pair<long, long>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}}));
}

TEST(VerifyFactorizations, BlockIdentitiesHold) {
    for (int t = 2; t <= 6; ++t) {
        auto report = verify_factorizations(t);
        EXPECT_TRUE(report.ok) << "t=" << t;
        for (const auto& c : report.checks) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
    }
    EXPECT_THROW(verify_factorizations(1), std::invalid_argument);
}

TEST(VerifyFactorizations, BaseCaseIdentity) {
    auto report = verify_factorizations(2);
    bool saw_base = false;
    for (const auto& c : report.checks)
        if (c.name == "N_4 = A_2") saw_base = c.ok;
    EXPECT_TRUE(saw_base);
}

}  // namespace
}  // namespace adft

#include "adft/dirichlet.hpp"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"

namespace adft {
namespace {

const DirichletChar& nontrivial_mod4() {
    static const std::vector<DirichletChar> chars = characters(4);
    return chars[1];
}

std::vector<long> sorted_conductors(long m) {
    std::vector<long> fs;
    for (const auto& chi : characters(m)) fs.push_back(chi.conductor());
    std::sort(fs.begin(), fs.end());
    return fs;
}

TEST(UnitGroupTest, KnownGenerators) {
    auto g4 = unit_group(4);
    EXPECT_EQ(g4->generators(), std::vector<long>{3});
    EXPECT_EQ(g4->orders(), std::vector<long>{2});

    auto g8 = unit_group(8);
    EXPECT_EQ(g8->generators(), (std::vector<long>{7, 5}));
    EXPECT_EQ(g8->orders(), (std::vector<long>{2, 2}));

    auto g9 = unit_group(9);
    EXPECT_EQ(g9->generators(), std::vector<long>{2});
    EXPECT_EQ(g9->orders(), std::vector<long>{6});
}

TEST(UnitGroupTest, EveryUnitHasUniqueExponentVector) {
    for (long m = 1; m <= 100; ++m) {
        auto g = unit_group(m);
        long prod = 1;
        for (long d : g->orders()) prod *= d;
        ASSERT_EQ(prod, euler_phi(m));
        long units = 0;
        for (long a = 0; a < std::max<long>(m, 2); ++a)
            if (g->dlog(a)) ++units;
        ASSERT_EQ(units, m == 1 ? 2 : euler_phi(m)) << m;  // m=1: both residues alias 0
    }
}

TEST(CharactersTest, ModFourPair) {
    auto chars = characters(4);
    ASSERT_EQ(chars.size(), 2u);
    EXPECT_TRUE(chars[0].is_principal());
    EXPECT_EQ(chars[0].conductor(), 1);
    EXPECT_EQ(chars[1].conductor(), 4);
    EXPECT_EQ(chars[1].order(), 2);
    EXPECT_EQ(*chars[1].eval(3), 1);  // value -1
}

TEST(CharactersTest, ModEightConductors) {
    EXPECT_EQ(sorted_conductors(8), (std::vector<long>{1, 4, 8, 8}));
}

TEST(CharactersTest, PrimeModulusHasOneQuadraticCharacter) {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        auto chars = characters(p);
        EXPECT_EQ(static_cast<long>(chars.size()), p - 1);
        EXPECT_TRUE(chars[0].is_principal());
        long quadratic = 0;
        for (const auto& chi : chars)
            if (chi.order() == 2) ++quadratic;
        EXPECT_EQ(quadratic, 1);
    }
}

TEST(CharEval, PrincipalIsOneOnUnits) {
    for (long m : {1L, 4L, 12L}) {
        auto chi0 = characters(m)[0];
        for (long a : units_mod(m)) EXPECT_EQ(*chi0.eval(a), 0);
    }
}

TEST(CharEval, ZeroOffUnits) {
    for (long m : {4L, 9L, 15L})
        for (const auto& chi : characters(m)) EXPECT_FALSE(chi.eval(m).has_value());
}

TEST(CharEval, CompletelyMultiplicativeOnUnits) {
    for (long m : {5L, 8L, 9L, 12L, 15L, 16L, 21L}) {
        for (const auto& chi : characters(m)) {
            for (long a : units_mod(m))
                for (long b : units_mod(m)) {
                    long lhs = *chi.eval(a * b % m);
                    long rhs = (*chi.eval(a) + *chi.eval(b)) % chi.order();
                    ASSERT_EQ(lhs, rhs) << "m=" << m;
                }
        }
    }
}

TEST(CharEval, ConjugateNegatesExponents) {
    for (const auto& chi : characters(15)) {
        auto bar = chi.conjugate();
        for (long a : units_mod(15)) {
            long sum = (*chi.eval(a) + *bar.eval(a)) % chi.order();
            ASSERT_EQ(sum, 0);
        }
    }
}

TEST(ConductorTest, MinimalityByBruteForce) {
    // No proper divisor f' of the conductor admits a character mod f'
    // agreeing with chi on all units of m.
    for (long m = 1; m <= 24; ++m) {
        for (const auto& chi : characters(m)) {
            const long f = chi.conductor();
            for (long fp : divisors(f)) {
                if (fp == f) continue;
                bool some_match = false;
                for (const auto& psi : characters(fp)) {
                    bool match = true;
                    for (long a : units_mod(m)) {
                        long lk = *chi.eval_lambda(a);
                        long pk = *psi.eval_lambda(a % fp == 0 ? fp : a % fp);
                        // Compare as rationals k/lambda of a full turn.
                        if (lk * psi.group()->lambda() != pk * chi.group()->lambda()) {
                            match = false;
                            break;
                        }
                    }
                    if (match) {
                        some_match = true;
                        break;
                    }
                }
                ASSERT_FALSE(some_match) << "chi mod " << m << " factors below its conductor " << f;
            }
        }
    }
}

TEST(GaussSumTest, DirectKnownValues) {
    auto ring4 = ring_create(4);
    CycloElem tau = gauss_sum_direct(nontrivial_mod4(), 4, 1, ring4);
    EXPECT_EQ(tau, make_rat(2) * zeta_power(ring4, 1));

    auto chi0_mod1 = characters(1)[0];
    EXPECT_EQ(gauss_sum_direct(chi0_mod1, 1, 0, ring4), CycloElem::from_rational(ring4, 1));

    // The quadratic character mod 3 has order 2, so the working ring must
    // contain zeta_6; the two-term sum zeta_3 - zeta_3^2 is expressed there.
    auto ring6 = ring_create(6);
    auto quad3 = characters(3)[1];
    EXPECT_EQ(quad3.order(), 2);
    EXPECT_EQ(gauss_sum_direct(quad3, 3, 1, ring6), zeta_power(ring6, 2) - zeta_power(ring6, 4));
}

TEST(GaussSumTest, RingTooSmallThrows) {
    EXPECT_THROW(gauss_sum_direct(characters(8)[1], 8, 1, ring_create(4)), std::invalid_argument);
}

TEST(GaussSumTest, ReducedKnownCases) {
    // Non-coprime exponent mod 4 collapses to conductor 2, where chi does not live.
    auto red = gauss_sum_reduced(nontrivial_mod4(), 4, 2);
    EXPECT_TRUE(red.zero);

    // Principal character mod 1 viewed at modulus m picks up mu(m).
    auto chi0 = characters(1)[0];
    for (long m : {2L, 6L, 12L}) {
        auto r = gauss_sum_reduced(chi0, m, 1);
        if (moebius(m) == 0) {
            EXPECT_TRUE(r.zero);
        } else {
            EXPECT_FALSE(r.zero);
            EXPECT_EQ(r.scale, Rat(moebius(m)));
            EXPECT_EQ(r.twist, 0);
        }
    }

    // Quadratic character mod 3 at modulus 15, a = 5: scale phi(15)/phi(3) = 4.
    auto quad3 = characters(3)[1];
    auto r = gauss_sum_reduced(quad3, 15, 5);
    EXPECT_FALSE(r.zero);
    EXPECT_EQ(r.scale, Rat(4) * Rat(moebius(1)));
}

TEST(GaussSumTest, ReductionMatchesDirectSummation) {
    for (long m = 1; m <= 20; ++m) {
        auto ring = ring_create(std::lcm(m, carmichael_lambda(m)));
        for (const auto& chi : characters(m)) {
            for (long a = 0; a < m; ++a) {
                CycloElem direct = gauss_sum_direct(chi, m, a, ring);
                CycloElem reduced = materialize_reduction(gauss_sum_reduced(chi, m, a), chi, ring);
                ASSERT_EQ(direct, reduced) << "m=" << m << " a=" << a;
            }
        }
    }
}

TEST(GaussSumTest, ProductWithConjugateIsSignedConductor) {
    for (long m = 1; m <= 20; ++m) {
        for (const auto& chi : characters(m)) {
            const long f = chi.conductor();
            auto ring = ring_create(std::lcm(f, chi.order()));
            CycloElem lhs = gauss_sum(chi, ring) * gauss_sum(chi.conjugate(), ring);
            Rat rhs = Rat(chi.value_at_minus_one()) * Rat(f);
            ASSERT_EQ(lhs, CycloElem::from_rational(ring, rhs)) << "m=" << m;
        }
    }
}

}  // namespace
}  // namespace adft

#include "properties.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "lensbound/bounds.hpp"
#include "lensbound/modseq.hpp"
#include "oracle.hpp"

using namespace lensbound;

#define EXPECT_PROPERTY(expr)                       \
    do {                                            \
        const auto res_ = (expr);                   \
        EXPECT_TRUE(res_.ok) << res_.detail;        \
        EXPECT_GE(res_.cases, props::kDefaultCases); \
    } while (0)

TEST(Properties, PhiIsPermutation) { EXPECT_PROPERTY(props::phi_permutation()); }
TEST(Properties, PsiConsistency) { EXPECT_PROPERTY(props::psi_consistency()); }
TEST(Properties, PhiCountRange) { EXPECT_PROPERTY(props::phi_count_range()); }
TEST(Properties, CandidatesNonNegative) { EXPECT_PROPERTY(props::candidate_nonnegativity()); }
TEST(Properties, FastCountMatchesScanRandom) { EXPECT_PROPERTY(props::fast_count_random()); }
TEST(Properties, Type8GenusIntegral) { EXPECT_PROPERTY(props::type8_genus_integrality()); }
TEST(Properties, TorusGenusIntegral) { EXPECT_PROPERTY(props::torus_genus_integrality()); }
TEST(Properties, PredicatesMonotone) { EXPECT_PROPERTY(props::predicate_monotonicity()); }
TEST(Properties, SurveyDeterministicAcrossThreads) { EXPECT_PROPERTY(props::survey_thread_determinism()); }

TEST(Properties, PureFunctionsAreDeterministic) {
    props::TripleGen gen(42);
    for (int k = 0; k < 1000; ++k) {
        const auto t = gen.next(2, 1'000'000'000);
        ASSERT_EQ(modseq::invariant_profile(t), modseq::invariant_profile(t));
    }
}

// Every (q, u, n) for small p.
TEST(OracleEquivalence, ExhaustiveSmallOrders) {
    for (std::uint64_t p = 2; p <= 40; ++p)
        for (std::uint64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::uint64_t u = 1; u < p; ++u) {
                const modseq::DualKnotParams t(p, q, u);
                for (std::uint64_t n = 1; n < p; ++n)
                    ASSERT_EQ(modseq::phi_count_fast(t, n), oracle::scan_count(p, q, u, n)) << p << ' ' << q << ' ' << u;
            }
        }
}

// Every coprime (p, q) up to 2000, one u per pair, checked at n = psi - 1 and a
// second n, against a single incremental pass.
TEST(OracleEquivalence, AllPairsUpTo2000) {
    std::mt19937_64 rng(2000);
    for (std::uint64_t p = 3; p <= 2000; ++p)
        for (std::uint64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const std::uint64_t u = std::uniform_int_distribution<std::uint64_t>(1, p - 1)(rng);
            const std::uint64_t n2 = std::uniform_int_distribution<std::uint64_t>(1, p - 1)(rng);
            std::uint64_t cur = 0, count = 0, at_psi = 0, at_n2 = 0, psi = 0;
            for (std::uint64_t i = 1; i < p; ++i) {
                cur += q;
                if (cur >= p) cur -= p;
                if (cur == u) {
                    psi = i;
                    at_psi = count;
                }
                count += cur < u ? 1 : 0;
                if (i == n2) at_n2 = count;
            }
            const modseq::DualKnotParams t(p, q, u);
            ASSERT_EQ(modseq::psi(t), psi);
            ASSERT_EQ(modseq::phi_count(t), at_psi) << p << ' ' << q << ' ' << u;
            ASSERT_EQ(modseq::phi_count_fast(t, n2), at_n2) << p << ' ' << q << ' ' << u << ' ' << n2;
        }
}

// The squared predicates agree with the printed radical forms away from the boundary.
TEST(Properties, SquareRootFreeMatchesRadicalForm) {
    for (std::int64_t g = 0; g <= 10000; ++g) {
        const long double gl = g;
        const long double torus = 2 * gl + std::sqrt(8 * gl + 1);
        const long double sat = 2 * gl + std::sqrt(8 * gl) + 1;
        const long double conj = 2 * gl + 2 * std::sqrt(40 * gl + 1) / 5 + 0.6L;
        for (std::int64_t p = 1; p <= 10000; ++p) {
            const long double pl = p;
            if (std::fabs(pl - torus) >= 1e-6L) {
                ASSERT_EQ(bounds::torus_lower(p, g).holds, torus <= pl) << p << ' ' << g;
            }
            if (std::fabs(pl - sat) >= 1e-6L) {
                ASSERT_EQ(bounds::satellite_lower(p, g).holds, sat <= pl) << p << ' ' << g;
            }
            if (std::fabs(pl - conj) >= 1e-6L) {
                ASSERT_EQ(bounds::conjecture_bounds(p, g).lower.holds, conj <= pl) << p << ' ' << g;
            }
        }
    }
}

// The satellite bound dominates the torus bound: (p-2g-1)^2 >= 8g implies (p-2g)^2 >= 8g+1.
TEST(Properties, SatelliteBoundDominatesTorusBound) {
    for (std::int64_t g = 1; g <= 2000; ++g)
        for (std::int64_t p = 2 * g + 1; p <= 2 * g + 400; ++p)
            if (bounds::satellite_lower(p, g).holds) ASSERT_TRUE(bounds::torus_lower(p, g).holds) << p << ' ' << g;
}

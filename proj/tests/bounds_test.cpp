#include "lensbound/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "lensbound/errors.hpp"

using namespace lensbound;
using bounds::BoundCheck;

namespace {
constexpr BoundCheck kHoldsEq{true, true};
constexpr BoundCheck kHolds{true, false};
constexpr BoundCheck kFails{false, false};
}  // namespace

TEST(Bounds, Kmos) {
    EXPECT_EQ(bounds::kmos_lower(5, 1), kHolds);
    EXPECT_EQ(bounds::kmos_lower(1, 1), kHoldsEq);
    EXPECT_EQ(bounds::kmos_lower(19, 5), kHolds);
}

TEST(Bounds, Rasmussen) {
    EXPECT_EQ(bounds::rasmussen_upper(7, 1), kHoldsEq);
    EXPECT_EQ(bounds::rasmussen_upper(19, 5), kHolds);
    EXPECT_EQ(bounds::rasmussen_upper(24, 5), kFails);
}

TEST(Bounds, GodaTeragaito) {
    auto gt = bounds::gt_bounds(18, 5);
    EXPECT_EQ(gt.lower, kHoldsEq);
    EXPECT_EQ(gt.upper, kHolds);
    gt = bounds::gt_bounds(19, 5);
    EXPECT_EQ(gt.lower, kHolds);
    EXPECT_EQ(gt.upper, kHoldsEq);
    gt = bounds::gt_bounds(5, 1);
    EXPECT_EQ(gt.lower, kFails);
    EXPECT_EQ(gt.upper, kFails);

    EXPECT_EQ(bounds::gt_hyperbolic_upper(19, 5), kHolds);
    EXPECT_EQ(bounds::gt_hyperbolic_upper(5, 1), kHoldsEq);
    EXPECT_EQ(bounds::gt_hyperbolic_upper(54, 5), kFails);
}

TEST(Bounds, TorusLower) {
    EXPECT_EQ(bounds::torus_lower(5, 1), kHoldsEq);
    EXPECT_EQ(bounds::torus_lower(11, 3), kHoldsEq);
    EXPECT_EQ(bounds::torus_lower(7, 2), kFails);
    // d = p - 2g negative: never holds even though d^2 is large.
    EXPECT_EQ(bounds::torus_lower(1, 100), kFails);
}

TEST(Bounds, SatelliteLower) {
    EXPECT_EQ(bounds::satellite_lower(25, 8), kHoldsEq);
    EXPECT_EQ(bounds::satellite_lower(49, 18), kHoldsEq);
    EXPECT_EQ(bounds::satellite_lower(25, 9), kFails);
}

TEST(Bounds, Conjecture) {
    auto c = bounds::conjecture_bounds(31, 11);
    EXPECT_EQ(c.lower, kHoldsEq);
    EXPECT_EQ(c.upper, kHolds);  // 31 <= 36
    EXPECT_FALSE(c.is_exception);

    c = bounds::conjecture_bounds(18, 5);
    EXPECT_EQ(c.lower, kHolds);
    EXPECT_EQ(c.upper, kHoldsEq);
    EXPECT_FALSE(c.is_exception);

    c = bounds::conjecture_bounds(19, 5);
    EXPECT_EQ(c.lower, kHolds);
    EXPECT_EQ(c.upper, kFails);
    EXPECT_TRUE(c.is_exception);
}

TEST(Bounds, EvaluateAll) {
    const auto r = bounds::evaluate_all(19, 5);
    EXPECT_TRUE(r.is_exception);
    EXPECT_FALSE(r.conjecture_upper.holds);
    for (auto c : {r.kmos_lower, r.rasmussen_upper, r.gt_lower, r.gt_upper, r.gt_hyperbolic_upper, r.torus_lower,
                   r.satellite_lower, r.conjecture_lower})
        EXPECT_TRUE(c.holds);

    const auto t = bounds::evaluate_all(5, 1);
    EXPECT_EQ(t.torus_lower, kHoldsEq);
    EXPECT_EQ(t.conjecture_lower, kFails);

    const auto ras = bounds::evaluate_all(7, 1);
    EXPECT_EQ(ras.rasmussen_upper, kHoldsEq);
    EXPECT_EQ(ras.conjecture_upper, kFails);
}

TEST(Bounds, ExtremeInputsDoNotOverflow) {
    constexpr auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_EQ(bounds::torus_lower(big, 0), kHolds);
    EXPECT_EQ(bounds::conjecture_bounds(big, 0).lower, kHolds);
    EXPECT_EQ(bounds::conjecture_bounds(big, big).lower, kFails);
    EXPECT_EQ(bounds::rasmussen_upper(big, big), kHolds);
    EXPECT_EQ(bounds::kmos_lower(big, big), kFails);
    EXPECT_EQ(bounds::satellite_lower(big, big / 4), kHolds);
}

TEST(Bounds, EqualityImpliesHolds) {
    for (std::int64_t g = 0; g <= 300; ++g)
        for (std::int64_t p = 1; p <= 1300; ++p) {
            const auto r = bounds::evaluate_all(p, g);
            for (auto c : {r.kmos_lower, r.rasmussen_upper, r.gt_lower, r.gt_upper, r.gt_hyperbolic_upper,
                           r.torus_lower, r.satellite_lower, r.conjecture_lower, r.conjecture_upper})
                ASSERT_TRUE(!c.equality || c.holds) << p << ' ' << g;
            ASSERT_EQ(r.is_exception, p == 19 && g == 5);
        }
}

TEST(ProofIdentities, HoldUpTo100) {
    const auto res = bounds::verify_proof_identities(100);
    EXPECT_TRUE(res.ok);
    EXPECT_FALSE(res.failure.has_value());
    EXPECT_THROW((void)bounds::verify_proof_identities(1), DomainError);
}

TEST(ProofIdentities, SpotValues) {
    // (r, s) = (3, 2)
    EXPECT_EQ((3 + 2 - 2) * (3 + 2 - 2) - (4 * 2 * 1 + 1), (3 - 2) * (3 - 2) - 1);
    // (a, b) = (5, 2): genus numerator 22
    EXPECT_EQ(21 * 21 - (20 * 22 + 1), 5 * 1 - 5);
}

#include "lensbound/modseq.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numeric>

#include "lensbound/errors.hpp"
#include "oracle.hpp"

using namespace lensbound;
using modseq::DualKnotParams;

TEST(DualKnotParams, RejectsInvalid) {
    EXPECT_THROW(DualKnotParams(1, 1, 1), DomainError);
    EXPECT_THROW(DualKnotParams(18, 3, 7), DomainError);   // gcd 3
    EXPECT_THROW(DualKnotParams(7, 14, 3), DomainError);   // q = 0 mod p
    EXPECT_THROW(DualKnotParams(7, 3, 0), DomainError);
    EXPECT_THROW(DualKnotParams(7, 3, 7), DomainError);
}

TEST(DualKnotParams, NormalizesQ) {
    EXPECT_EQ(DualKnotParams(31, 48, 18).q(), 17u);
    EXPECT_EQ(DualKnotParams::with_signed_q(31, -14, 18).q(), 17u);
    EXPECT_EQ(DualKnotParams::with_signed_q(31, -14, 18), DualKnotParams(31, 17, 18));
    EXPECT_THROW(DualKnotParams::with_signed_q(31, -62, 18), DomainError);
    EXPECT_NO_THROW(DualKnotParams::with_signed_q(3, std::numeric_limits<std::int64_t>::min(), 1));
}

TEST(PhiSequence, Examples) {
    EXPECT_EQ(modseq::phi_sequence({31, 17, 1}, 5), (std::vector<std::uint64_t>{17, 3, 20, 6, 23}));
    EXPECT_EQ(modseq::phi_sequence({7, 1, 1}, 6), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(modseq::phi_sequence({18, 5, 1}, 5), (std::vector<std::uint64_t>{5, 10, 15, 2, 7}));
}

TEST(PhiSequence, LengthBounds) {
    EXPECT_THROW((void)modseq::phi_sequence({7, 3, 1}, 0), DomainError);
    EXPECT_THROW((void)modseq::phi_sequence({7, 3, 1}, 8), DomainError);
    EXPECT_EQ(modseq::phi_sequence({7, 3, 1}, 7).back(), 0u);
}

TEST(Psi, Examples) {
    EXPECT_EQ(modseq::psi({31, 17, 18}), 12u);
    EXPECT_EQ(modseq::psi({7, 3, 3}), 1u);
    EXPECT_EQ(modseq::psi({18, 5, 7}), 5u);
}

TEST(InverseMod, MatchesDefinition) {
    for (std::uint64_t p = 2; p < 300; ++p)
        for (std::uint64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) ASSERT_EQ(modseq::inverse_mod(q, p) * q % p, 1u % p) << p << ' ' << q;
    EXPECT_THROW((void)modseq::inverse_mod(6, 9), DomainError);
}

TEST(PhiCount, Examples) {
    EXPECT_EQ(modseq::phi_count({31, 17, 18}), 7u);
    EXPECT_EQ(modseq::phi_count({7, 3, 3}), 0u);
    EXPECT_EQ(modseq::phi_count({18, 5, 7}), 2u);
}

TEST(PhiCountFast, Examples) {
    EXPECT_EQ(modseq::phi_count_fast({31, 17, 18}, 11), 7u);
    EXPECT_EQ(modseq::phi_count_fast({5, 2, 4}, 4), 3u);
    EXPECT_EQ(modseq::phi_count_fast({7, 1, 1}, 6), 0u);
}

TEST(PhiCountFast, RangeOfN) {
    EXPECT_THROW((void)modseq::phi_count_fast({7, 3, 3}, 0), DomainError);
    EXPECT_THROW((void)modseq::phi_count_fast({7, 3, 3}, 7), DomainError);
    // All nonzero residues appear once in phi_1..phi_{p-1}.
    EXPECT_EQ(modseq::phi_count_fast({101, 29, 40}, 100), 39u);
}

TEST(FloorSum, MatchesDirectSum) {
    for (std::uint64_t m = 1; m <= 40; ++m)
        for (std::uint64_t a = 0; a <= 45; ++a)
            for (std::uint64_t b = 0; b <= 45; b += 3)
                for (std::uint64_t n = 0; n <= 30; n += 7) {
                    std::uint64_t direct = 0;
                    for (std::uint64_t i = 0; i < n; ++i) direct += (a * i + b) / m;
                    ASSERT_EQ(static_cast<std::uint64_t>(modseq::floor_sum(n, m, a, b)), direct)
                        << n << ' ' << m << ' ' << a << ' ' << b;
                }
}

TEST(PhiCountFast, NearFullWidthOrder) {
    // Largest prime below 2^64; exercises the 128-bit path.
    const std::uint64_t p = 18446744073709551557ull;
    const DualKnotParams t(p, 0x9e3779b97f4a7c15ull, p / 3);
    unsigned __int128 cur = 0;
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        cur = (cur + t.q()) % p;
        count += cur < t.u() ? 1 : 0;
        if (n % 997 == 0 || n == 5000) ASSERT_EQ(modseq::phi_count_fast(t, n), count) << n;
    }
    const auto idx = modseq::psi(t);
    EXPECT_EQ(static_cast<std::uint64_t>(static_cast<unsigned __int128>(idx) * t.q() % p), t.u());
}

TEST(InvariantProfile, Examples) {
    const auto a = modseq::invariant_profile({31, 17, 18});
    EXPECT_EQ(a.psi, 12u);
    EXPECT_EQ(a.phi, 7u);
    EXPECT_EQ(a.candidates, (std::array<std::uint64_t, 4>{7, 8, 4, 10}));
    EXPECT_EQ(a.phi_tilde, 4u);

    const auto b = modseq::invariant_profile({18, 5, 7});
    EXPECT_EQ(b.psi, 5u);
    EXPECT_EQ(b.phi, 2u);
    EXPECT_EQ(b.candidates, (std::array<std::uint64_t, 4>{2, 8, 2, 4}));
    EXPECT_EQ(b.phi_tilde, 2u);

    const auto c = modseq::invariant_profile({7, 3, 3});
    EXPECT_EQ(c.psi, 1u);
    EXPECT_EQ(c.phi, 0u);
    EXPECT_EQ(c.candidates, (std::array<std::uint64_t, 4>{0, 3, 0, 2}));
    EXPECT_EQ(c.phi_tilde, 0u);
}

TEST(InvariantProfile, AgreesWithBruteForceOnSmallOrders) {
    for (std::uint64_t p = 2; p <= 60; ++p)
        for (std::uint64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::uint64_t u = 1; u < p; ++u) {
                const auto brute = oracle::brute_profile(p, q, u);
                const auto prof = modseq::invariant_profile({p, q, u});
                ASSERT_EQ(prof.psi, static_cast<std::uint64_t>(brute.psi));
                ASSERT_EQ(prof.phi, static_cast<std::uint64_t>(brute.phi));
                ASSERT_EQ(prof.phi_tilde, static_cast<std::uint64_t>(brute.phi_tilde));
            }
        }
}

TEST(IsHyperbolicDual, Examples) {
    EXPECT_TRUE(modseq::is_hyperbolic_dual({31, 17, 18}));
    EXPECT_TRUE(modseq::is_hyperbolic_dual({18, 5, 7}));
    EXPECT_FALSE(modseq::is_hyperbolic_dual({7, 3, 3}));
}

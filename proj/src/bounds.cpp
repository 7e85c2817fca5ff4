#include "lensbound/bounds.hpp"

#include <compare>

#include "lensbound/errors.hpp"

namespace lensbound::bounds {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Compares d^2 with rhs for d >= 0 and rhs >= 0 without overflowing.
std::strong_ordering compare_square(i128 d, i128 rhs) {
    const auto ud = static_cast<u128>(d);
    if (ud >> 64 != 0) return std::strong_ordering::greater;  // d^2 >= 2^128 > rhs
    const u128 sq = ud * ud;
    const auto urhs = static_cast<u128>(rhs);
    if (sq < urhs) return std::strong_ordering::less;
    if (sq > urhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// value <= bound-style checks: lhs <= rhs
BoundCheck at_most(i128 lhs, i128 rhs) { return {lhs <= rhs, lhs == rhs}; }

// d + sqrt(rhs) style: holds iff d >= 0 and d^2 >= rhs.
BoundCheck radical_lower(i128 d, i128 rhs) {
    if (d < 0 || rhs < 0) {
        // rhs < 0 only for negative g, where the radical is undefined.
        return {false, false};
    }
    const auto cmp = compare_square(d, rhs);
    return {cmp != std::strong_ordering::less, cmp == std::strong_ordering::equal};
}

}  // namespace

BoundCheck kmos_lower(std::int64_t p, std::int64_t g) { return at_most(i128{2} * g - 1, p); }

BoundCheck rasmussen_upper(std::int64_t p, std::int64_t g) { return at_most(p, i128{4} * g + 3); }

TwoSidedCheck gt_bounds(std::int64_t p, std::int64_t g) {
    return {at_most(i128{2} * g + 8, p), at_most(p, i128{4} * g - 1)};
}

BoundCheck gt_hyperbolic_upper(std::int64_t p, std::int64_t g) { return at_most(p, i128{12} * g - 7); }

BoundCheck torus_lower(std::int64_t p, std::int64_t g) {
    return radical_lower(i128{p} - i128{2} * g, i128{8} * g + 1);
}

BoundCheck satellite_lower(std::int64_t p, std::int64_t g) {
    return radical_lower(i128{p} - i128{2} * g - 1, i128{8} * g);
}

ConjectureCheck conjecture_bounds(std::int64_t p, std::int64_t g) {
    ConjectureCheck out;
    // 5p - 10g - 3 >= 2 sqrt(40g + 1)  <=>  d >= 0 and d^2 >= 160g + 4
    out.lower = radical_lower(i128{5} * p - i128{10} * g - 3, i128{160} * g + 4);
    out.upper = at_most(p, i128{3} * g + 3);
    out.is_exception = g == kExceptionGenus && p == kExceptionOrder;
    return out;
}

BoundReport evaluate_all(std::int64_t p, std::int64_t g) {
    BoundReport r;
    r.kmos_lower = kmos_lower(p, g);
    r.rasmussen_upper = rasmussen_upper(p, g);
    const auto gt = gt_bounds(p, g);
    r.gt_lower = gt.lower;
    r.gt_upper = gt.upper;
    r.gt_hyperbolic_upper = gt_hyperbolic_upper(p, g);
    r.torus_lower = torus_lower(p, g);
    r.satellite_lower = satellite_lower(p, g);
    const auto conj = conjecture_bounds(p, g);
    r.conjecture_lower = conj.lower;
    r.conjecture_upper = conj.upper;
    r.is_exception = conj.is_exception;
    return r;
}

IdentityResult verify_proof_identities(std::int64_t max) {
    if (max < 2) throw DomainError("verify_proof_identities: max must be at least 2");
    for (i128 r = 3; r <= max; ++r) {
        for (i128 s = 2; s < r; ++s) {
            const i128 lhs = (r + s - 2) * (r + s - 2) - (4 * (r - 1) * (s - 1) + 1);
            const i128 rhs = (r - s) * (r - s) - 1;
            if (lhs != rhs)
                return {false, IdentityFailure{"torus", static_cast<std::int64_t>(r), static_cast<std::int64_t>(s)}};
        }
    }
    for (i128 a = 3; a <= max; ++a) {
        for (i128 b = 1; 2 * b < a; ++b) {
            const i128 genus_twice = a * a + a * b - b * b - 2 * a + 1;
            const i128 lhs = (5 * a - 4) * (5 * a - 4) - (20 * genus_twice + 1);
            const i128 rhs = 5 * (a - 2 * b) * (a - 2 * b) - 5;
            if (lhs != rhs)
                return {false, IdentityFailure{"type8", static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}};
        }
    }
    return {true, std::nullopt};
}

}  // namespace lensbound::bounds

#pragma once

// Order-versus-genus bounds for lens space surgeries, evaluated as exact integer
// predicates. Radical bounds are squared with an explicit sign check, so
// equality detection is exact. Predicates are total on int64 inputs and do not
// know whether a knot is hyperbolic; scoping is left to the caller.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace lensbound::bounds {

struct BoundCheck {
    bool holds = false;
    bool equality = false;

    friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct TwoSidedCheck {
    BoundCheck lower;
    BoundCheck upper;

    friend bool operator==(const TwoSidedCheck&, const TwoSidedCheck&) = default;
};

struct ConjectureCheck {
    BoundCheck lower;
    BoundCheck upper;
    bool is_exception = false;

    friend bool operator==(const ConjectureCheck&, const ConjectureCheck&) = default;
};

struct BoundReport {
    BoundCheck kmos_lower;
    BoundCheck rasmussen_upper;
    BoundCheck gt_lower;
    BoundCheck gt_upper;
    BoundCheck gt_hyperbolic_upper;
    BoundCheck torus_lower;
    BoundCheck satellite_lower;
    BoundCheck conjecture_lower;
    BoundCheck conjecture_upper;
    bool is_exception = false;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// The single (g, p) point excluded from the conjectured upper bound.
inline constexpr std::int64_t kExceptionGenus = 5;
inline constexpr std::int64_t kExceptionOrder = 19;

// 2g - 1 <= p
[[nodiscard]] BoundCheck kmos_lower(std::int64_t p, std::int64_t g);
// p <= 4g + 3
[[nodiscard]] BoundCheck rasmussen_upper(std::int64_t p, std::int64_t g);
// 2g + 8 <= p <= 4g - 1
[[nodiscard]] TwoSidedCheck gt_bounds(std::int64_t p, std::int64_t g);
// p <= 12g - 7
[[nodiscard]] BoundCheck gt_hyperbolic_upper(std::int64_t p, std::int64_t g);
// 2g + sqrt(8g + 1) <= p
[[nodiscard]] BoundCheck torus_lower(std::int64_t p, std::int64_t g);
// 2g + sqrt(8g) + 1 <= p
[[nodiscard]] BoundCheck satellite_lower(std::int64_t p, std::int64_t g);
// 2g + 2 sqrt(40g + 1)/5 + 3/5 <= p <= 3g + 3, except (g, p) = (5, 19)
[[nodiscard]] ConjectureCheck conjecture_bounds(std::int64_t p, std::int64_t g);

[[nodiscard]] BoundReport evaluate_all(std::int64_t p, std::int64_t g);

struct IdentityFailure {
    std::string identity;
    std::int64_t first = 0;
    std::int64_t second = 0;
};

struct IdentityResult {
    bool ok = true;
    std::optional<IdentityFailure> failure;
};

// Checks the two proof identities over all pairs up to max (max >= 2):
//   (r + s - 2)^2 - (4(r-1)(s-1) + 1) = (r - s)^2 - 1            for 2 <= s < r <= max
//   (5a - 4)^2 - (20(a^2 + ab - b^2 - 2a + 1) + 1) = 5(a-2b)^2 - 5  for 0 < 2b < a <= max
[[nodiscard]] IdentityResult verify_proof_identities(std::int64_t max);

}  // namespace lensbound::bounds

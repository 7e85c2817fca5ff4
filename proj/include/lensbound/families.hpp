#pragma once

// Generators for the knot families whose surgery order p and Seifert genus g
// are known in closed form. Dual-bearing families are certified hyperbolic
// through modseq at construction time.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lensbound/modseq.hpp"

namespace lensbound::families {

// Declaration order is the survey's sort order.
enum class Family { TorusMoser, Type8, Type8LowerFamily, Type5Family, CableSatellite, PretzelPoint };

enum class KnotClass { Torus, Satellite, Hyperbolic, Unknown };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
[[nodiscard]] std::string_view to_string(KnotClass k) noexcept;
// Throws UsageError on an unknown name.
[[nodiscard]] Family family_from_string(std::string_view name);
[[nodiscard]] KnotClass knot_class_from_string(std::string_view name);

struct FamilyParams {
    std::optional<std::int64_t> first;
    std::optional<std::int64_t> second;

    friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

struct SurgeryRecord {
    Family family = Family::TorusMoser;
    FamilyParams params;
    std::int64_t p = 0;
    std::int64_t g = 0;
    std::optional<modseq::DualKnotParams> dual;
    KnotClass knot_class = KnotClass::Unknown;

    friend bool operator==(const SurgeryRecord&, const SurgeryRecord&) = default;
};

// Integral surgery on T(r, s): p = rs + sign, g = (r-1)(s-1)/2.
// Requires r > s >= 2, gcd(r, s) = 1, sign in {+1, -1}.
[[nodiscard]] SurgeryRecord torus_surgery(std::int64_t r, std::int64_t s, int sign);

// T(j+1, j) with coefficient j^2 + j - 1; equality case of the torus lower bound.
[[nodiscard]] SurgeryRecord torus_equality_family(std::int64_t j);

// k^-(a, b) with p = a^2 + ab - b^2, g = (p - 2a + 1)/2. Requires gcd(a, b) = 1, a > 2b > 0.
[[nodiscard]] SurgeryRecord type8(std::int64_t a, std::int64_t b);

// k^-(2j+1, j) with dual K(L(5j^2+5j+1, 5j^2-3); 5j^2-2). Throws
// ConsistencyError if the dual fails the phi_tilde >= 2 certificate.
[[nodiscard]] SurgeryRecord type8_lower_family(std::int64_t j);

// K_j: 9j-surgery with g = 3j - 1 and dual K(L(9j, 3j-1); 3j+1).
[[nodiscard]] SurgeryRecord type5_family(std::int64_t j);

// (2j(j+1)+1, 2)-cable of T(j+1, j): g = 2j^2, p = 4j^2 + 4j + 1.
[[nodiscard]] SurgeryRecord cable_family(std::int64_t j);

// 19-surgery on the (-2, 3, 7) pretzel knot, g = 5.
[[nodiscard]] SurgeryRecord pretzel_point();

}  // namespace lensbound::families

#include "lensbound/families.hpp"

#include <array>
#include <numeric>
#include <utility>

#include "lensbound/errors.hpp"

namespace lensbound::families {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y, const char* where) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out)) throw DomainError(std::string(where) + ": parameters overflow 64-bit order");
    return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y, const char* where) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(x, y, &out)) throw DomainError(std::string(where) + ": parameters overflow 64-bit order");
    return out;
}

void require_j(std::int64_t j, const char* where) {
    if (j < 2) throw DomainError(std::string(where) + ": j must be at least 2, got " + std::to_string(j));
}

// Attaches the dual and marks the record hyperbolic if the certificate passes.
SurgeryRecord certify(SurgeryRecord rec, const modseq::DualKnotParams& dual, const char* where) {
    if (dual.p() != static_cast<std::uint64_t>(rec.p))
        throw ConsistencyError(std::string(where) + ": dual order differs from surgery order");
    const auto prof = modseq::invariant_profile(dual);
    if (prof.phi_tilde < 2)
        throw ConsistencyError(std::string(where) + ": dual fails hyperbolicity certificate, phi_tilde=" +
                               std::to_string(prof.phi_tilde));
    rec.dual = dual;
    rec.knot_class = KnotClass::Hyperbolic;
    return rec;
}

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::TorusMoser, "TorusMoser"},
    {Family::Type8, "Type8"},
    {Family::Type8LowerFamily, "Type8LowerFamily"},
    {Family::Type5Family, "Type5Family"},
    {Family::CableSatellite, "CableSatellite"},
    {Family::PretzelPoint, "PretzelPoint"},
}};

constexpr std::array<std::pair<KnotClass, std::string_view>, 4> kClassNames{{
    {KnotClass::Torus, "Torus"},
    {KnotClass::Satellite, "Satellite"},
    {KnotClass::Hyperbolic, "Hyperbolic"},
    {KnotClass::Unknown, "Unknown"},
}};

}  // namespace

std::string_view to_string(Family f) noexcept {
    for (const auto& [tag, name] : kFamilyNames)
        if (tag == f) return name;
    return "?";
}

std::string_view to_string(KnotClass k) noexcept {
    for (const auto& [tag, name] : kClassNames)
        if (tag == k) return name;
    return "?";
}

Family family_from_string(std::string_view name) {
    for (const auto& [tag, tag_name] : kFamilyNames)
        if (tag_name == name) return tag;
    throw UsageError("unknown family tag '" + std::string(name) + "'");
}

KnotClass knot_class_from_string(std::string_view name) {
    for (const auto& [tag, tag_name] : kClassNames)
        if (tag_name == name) return tag;
    throw UsageError("unknown knot class '" + std::string(name) + "'");
}

SurgeryRecord torus_surgery(std::int64_t r, std::int64_t s, int sign) {
    if (!(r > s && s >= 2))
        throw DomainError("torus_surgery: need r > s >= 2, got (" + std::to_string(r) + ", " + std::to_string(s) + ")");
    if (std::gcd(r, s) != 1)
        throw DomainError("torus_surgery: gcd(r, s) != 1 for (" + std::to_string(r) + ", " + std::to_string(s) + ")");
    if (sign != 1 && sign != -1) throw DomainError("torus_surgery: sign must be +1 or -1");

    const std::int64_t rs = checked_mul(r, s, "torus_surgery");
    const std::int64_t twice_genus = checked_mul(r - 1, s - 1, "torus_surgery");
    if (twice_genus % 2 != 0) throw ConsistencyError("torus_surgery: (r-1)(s-1) is odd");

    SurgeryRecord rec;
    rec.family = Family::TorusMoser;
    rec.params = {r, s};
    rec.p = checked_add(rs, sign, "torus_surgery");
    rec.g = twice_genus / 2;
    rec.knot_class = KnotClass::Torus;
    return rec;
}

SurgeryRecord torus_equality_family(std::int64_t j) {
    require_j(j, "torus_equality_family");
    return torus_surgery(checked_add(j, 1, "torus_equality_family"), j, -1);
}

SurgeryRecord type8(std::int64_t a, std::int64_t b) {
    if (!(b > 0 && b <= (a - 1) / 2))
        throw DomainError("type8: need a > 2b > 0, got (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    if (std::gcd(a, b) != 1)
        throw DomainError("type8: gcd(a, b) != 1 for (" + std::to_string(a) + ", " + std::to_string(b) + ")");

    // a^2 + ab - b^2 = a(a + b) - b^2; the b^2 term cannot overflow once a(a+b) fits.
    const std::int64_t p = checked_mul(a, checked_add(a, b, "type8"), "type8") - b * b;
    // p - 2a + 1 >= a^2 - 2a + 1 > 0, no overflow past p.
    const std::int64_t twice_genus = p - 2 * a + 1;
    if (twice_genus % 2 != 0)
        throw ConsistencyError("type8: genus numerator is odd for (" + std::to_string(a) + ", " + std::to_string(b) + ")");

    SurgeryRecord rec;
    rec.family = Family::Type8;
    rec.params = {a, b};
    rec.p = p;
    rec.g = twice_genus / 2;
    rec.knot_class = KnotClass::Unknown;
    return rec;
}

SurgeryRecord type8_lower_family(std::int64_t j) {
    require_j(j, "type8_lower_family");
    SurgeryRecord rec = type8(checked_add(checked_mul(2, j, "type8_lower_family"), 1, "type8_lower_family"), j);
    rec.family = Family::Type8LowerFamily;
    rec.params = {j, std::nullopt};

    const std::int64_t five_j_sq = checked_mul(5, checked_mul(j, j, "type8_lower_family"), "type8_lower_family");
    const auto p = static_cast<std::uint64_t>(rec.p);
    const modseq::DualKnotParams dual(p, static_cast<std::uint64_t>(five_j_sq - 3),
                                      static_cast<std::uint64_t>(five_j_sq - 2));
    return certify(std::move(rec), dual, "type8_lower_family");
}

SurgeryRecord type5_family(std::int64_t j) {
    require_j(j, "type5_family");
    SurgeryRecord rec;
    rec.family = Family::Type5Family;
    rec.params = {j, std::nullopt};
    rec.p = checked_mul(9, j, "type5_family");
    rec.g = 3 * j - 1;

    const modseq::DualKnotParams dual(static_cast<std::uint64_t>(rec.p), static_cast<std::uint64_t>(3 * j - 1),
                                      static_cast<std::uint64_t>(3 * j + 1));
    return certify(std::move(rec), dual, "type5_family");
}

SurgeryRecord cable_family(std::int64_t j) {
    require_j(j, "cable_family");
    const std::int64_t j_sq = checked_mul(j, j, "cable_family");
    SurgeryRecord rec;
    rec.family = Family::CableSatellite;
    rec.params = {j, std::nullopt};
    rec.g = checked_mul(2, j_sq, "cable_family");
    rec.p = checked_add(checked_add(checked_mul(4, j_sq, "cable_family"), checked_mul(4, j, "cable_family"),
                                    "cable_family"),
                        1, "cable_family");
    rec.knot_class = KnotClass::Satellite;
    return rec;
}

SurgeryRecord pretzel_point() {
    SurgeryRecord rec;
    rec.family = Family::PretzelPoint;
    rec.p = 19;
    rec.g = 5;
    rec.knot_class = KnotClass::Hyperbolic;
    return rec;
}

}  // namespace lensbound::families

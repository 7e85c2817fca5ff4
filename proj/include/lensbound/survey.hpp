#pragma once

// Family-restricted survey: enumerate every generated record with p <= max_p,
// attach bound reports and dual certificates, and partition the hyperbolic
// rows against the conjectured order-versus-genus window.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lensbound/bounds.hpp"
#include "lensbound/families.hpp"

namespace lensbound::survey {

inline constexpr std::int64_t kDefaultMaxOrder = 1000;

struct SurveyRow {
    families::SurgeryRecord record;
    bounds::BoundReport report;
    std::optional<std::uint64_t> phi_tilde;

    friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

// One CSV line / JSON object. Field order matches kCsvHeader.
struct FlatRow {
    std::string family;
    std::optional<std::int64_t> param1;
    std::optional<std::int64_t> param2;
    std::int64_t p = 0;
    std::int64_t g = 0;
    std::string knot_class;
    std::optional<std::uint64_t> phi_tilde;
    bool kmos_l = false;
    bool rasmussen_u = false;
    bool gt_l = false;
    bool gt_u = false;
    bool gt_hyp_u = false;
    bool torus_l = false;
    bool satellite_l = false;
    bool conj_l = false;
    bool conj_l_eq = false;
    bool conj_u = false;
    bool conj_u_eq = false;
    bool exception = false;

    friend bool operator==(const FlatRow&, const FlatRow&) = default;
};

inline constexpr std::string_view kCsvHeader =
    "family,param1,param2,p,g,knot_class,phi_tilde,kmos_l,rasmussen_u,gt_l,gt_u,gt_hyp_u,"
    "torus_l,satellite_l,conj_l,conj_l_eq,conj_u,conj_u_eq,exception";

[[nodiscard]] std::vector<families::Family> all_families();

// Records of one family with p <= max_p, in increasing parameter order.
[[nodiscard]] std::vector<families::SurgeryRecord> family_records(families::Family family, std::int64_t max_p);

[[nodiscard]] SurveyRow make_row(families::SurgeryRecord record);

// Total order: family tag, then params lexicographically, then p.
[[nodiscard]] bool row_less(const SurveyRow& a, const SurveyRow& b);

// max_p < 1 throws UsageError. threads = 0 means one per hardware thread.
// Output is independent of the thread count.
[[nodiscard]] std::vector<SurveyRow> enumerate(std::int64_t max_p, std::span<const families::Family> selected,
                                               unsigned threads = 1);

struct ConjectureSummary {
    std::vector<SurveyRow> satisfied;
    std::vector<SurveyRow> exceptions;
    std::vector<SurveyRow> violations;
    std::size_t excluded = 0;  // rows not classified Hyperbolic
};

[[nodiscard]] ConjectureSummary conjecture_report(std::span<const SurveyRow> rows);

[[nodiscard]] FlatRow flatten(const SurveyRow& row);

[[nodiscard]] std::string to_csv(std::span<const FlatRow> rows);
[[nodiscard]] std::vector<FlatRow> parse_csv(std::string_view text);

[[nodiscard]] std::string to_json(std::span<const FlatRow> rows);
[[nodiscard]] std::vector<FlatRow> parse_json(std::string_view text);

[[nodiscard]] std::string to_text(std::span<const FlatRow> rows);

// One line naming what the survey covers, for report headers.
[[nodiscard]] std::string scope_label(std::int64_t max_p, std::span<const families::Family> selected);

[[nodiscard]] std::string summary_text(const ConjectureSummary& summary);

}  // namespace lensbound::survey

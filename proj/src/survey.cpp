#include "lensbound/survey.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "lensbound/errors.hpp"

namespace lensbound::survey {

using families::Family;
using families::SurgeryRecord;

namespace {

using i128 = __int128;

void torus_rows(std::int64_t max_p, std::vector<SurgeryRecord>& out) {
    for (std::int64_t s = 2; i128{s} * (s + 1) - 1 <= max_p; ++s) {
        for (std::int64_t r = s + 1; i128{r} * s - 1 <= max_p; ++r) {
            if (std::gcd(r, s) != 1) continue;
            out.push_back(families::torus_surgery(r, s, -1));
            if (i128{r} * s + 1 <= max_p) out.push_back(families::torus_surgery(r, s, +1));
        }
    }
}

void type8_rows(std::int64_t max_p, std::vector<SurgeryRecord>& out) {
    // Smallest order for a given b is at a = 2b + 1: 5b^2 + 5b + 1.
    for (std::int64_t b = 1; i128{5} * b * b + i128{5} * b + 1 <= max_p; ++b) {
        for (std::int64_t a = 2 * b + 1; i128{a} * a + i128{a} * b - i128{b} * b <= max_p; ++a) {
            if (std::gcd(a, b) == 1) out.push_back(families::type8(a, b));
        }
    }
}

template <typename Order, typename Make>
void indexed_rows(std::int64_t max_p, Order order, Make make, std::vector<SurgeryRecord>& out) {
    for (std::int64_t j = 2; order(i128{j}) <= max_p; ++j) out.push_back(make(j));
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string{}; }
std::string opt_str(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string{}; }
const char* bool_str(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw ParseError("csv line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view field) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("field '" + std::string(field) + "': not an integer: '" + std::string(s) + "'");
    return v;
}

template <typename Int>
std::optional<Int> parse_opt_int(std::string_view s, std::string_view field) {
    if (s.empty()) return std::nullopt;
    return parse_int<Int>(s, field);
}

bool parse_bool(std::string_view s, std::string_view field) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("field '" + std::string(field) + "': expected true/false, got '" + std::string(s) + "'");
}

constexpr std::array<std::string_view, 19> kColumns{
    "family", "param1", "param2",  "p",           "g",    "knot_class", "phi_tilde",
    "kmos_l", "rasmussen_u", "gt_l", "gt_u", "gt_hyp_u", "torus_l",    "satellite_l",
    "conj_l", "conj_l_eq",   "conj_u", "conj_u_eq", "exception"};

// Boolean columns in header order, starting at kmos_l.
std::array<bool FlatRow::*, 12> bool_members() {
    return {&FlatRow::kmos_l, &FlatRow::rasmussen_u, &FlatRow::gt_l,      &FlatRow::gt_u,
            &FlatRow::gt_hyp_u, &FlatRow::torus_l,   &FlatRow::satellite_l, &FlatRow::conj_l,
            &FlatRow::conj_l_eq, &FlatRow::conj_u,   &FlatRow::conj_u_eq, &FlatRow::exception};
}

void validate_names(const FlatRow& row) {
    (void)families::family_from_string(row.family);
    (void)families::knot_class_from_string(row.knot_class);
}

}  // namespace

std::vector<Family> all_families() {
    return {Family::TorusMoser,  Family::Type8,          Family::Type8LowerFamily,
            Family::Type5Family, Family::CableSatellite, Family::PretzelPoint};
}

std::vector<SurgeryRecord> family_records(Family family, std::int64_t max_p) {
    std::vector<SurgeryRecord> out;
    switch (family) {
        case Family::TorusMoser:
            torus_rows(max_p, out);
            break;
        case Family::Type8:
            type8_rows(max_p, out);
            break;
        case Family::Type8LowerFamily:
            indexed_rows(max_p, [](i128 j) { return 5 * j * j + 5 * j + 1; }, families::type8_lower_family, out);
            break;
        case Family::Type5Family:
            indexed_rows(max_p, [](i128 j) { return 9 * j; }, families::type5_family, out);
            break;
        case Family::CableSatellite:
            indexed_rows(max_p, [](i128 j) { return 4 * j * j + 4 * j + 1; }, families::cable_family, out);
            break;
        case Family::PretzelPoint:
            if (max_p >= bounds::kExceptionOrder) out.push_back(families::pretzel_point());
            break;
    }
    return out;
}

SurveyRow make_row(SurgeryRecord record) {
    SurveyRow row;
    row.report = bounds::evaluate_all(record.p, record.g);
    if (record.dual) row.phi_tilde = modseq::invariant_profile(*record.dual).phi_tilde;
    row.record = std::move(record);
    return row;
}

bool row_less(const SurveyRow& a, const SurveyRow& b) {
    return std::tie(a.record.family, a.record.params, a.record.p) <
           std::tie(b.record.family, b.record.params, b.record.p);
}

std::vector<SurveyRow> enumerate(std::int64_t max_p, std::span<const Family> selected, unsigned threads) {
    if (max_p < 1) throw UsageError("survey: max_p must be positive, got " + std::to_string(max_p));

    std::vector<Family> fams(selected.begin(), selected.end());
    std::sort(fams.begin(), fams.end());
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());

    std::vector<SurgeryRecord> records;
    for (Family f : fams) {
        auto part = family_records(f, max_p);
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SurveyRow> rows(records.size());
    const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(records.size(), 1));
    const std::size_t chunk = (records.size() + workers - 1) / std::max<std::size_t>(workers, 1);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) rows[i] = make_row(records[i]);
    };
    if (workers <= 1) {
        work(0, records.size());
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t begin = 0; begin < records.size(); begin += chunk)
            pool.emplace_back(work, begin, std::min(records.size(), begin + chunk));
    }

    std::sort(rows.begin(), rows.end(), row_less);
    return rows;
}

ConjectureSummary conjecture_report(std::span<const SurveyRow> rows) {
    ConjectureSummary out;
    for (const auto& row : rows) {
        if (row.record.knot_class != families::KnotClass::Hyperbolic) {
            ++out.excluded;
            continue;
        }
        const auto& rep = row.report;
        if (rep.is_exception) {
            out.exceptions.push_back(row);
        } else if (rep.conjecture_lower.holds && rep.conjecture_upper.holds) {
            out.satisfied.push_back(row);
        } else {
            out.violations.push_back(row);
        }
    }
    return out;
}

FlatRow flatten(const SurveyRow& row) {
    FlatRow f;
    f.family = std::string(families::to_string(row.record.family));
    f.param1 = row.record.params.first;
    f.param2 = row.record.params.second;
    f.p = row.record.p;
    f.g = row.record.g;
    f.knot_class = std::string(families::to_string(row.record.knot_class));
    f.phi_tilde = row.phi_tilde;
    const auto& r = row.report;
    f.kmos_l = r.kmos_lower.holds;
    f.rasmussen_u = r.rasmussen_upper.holds;
    f.gt_l = r.gt_lower.holds;
    f.gt_u = r.gt_upper.holds;
    f.gt_hyp_u = r.gt_hyperbolic_upper.holds;
    f.torus_l = r.torus_lower.holds;
    f.satellite_l = r.satellite_lower.holds;
    f.conj_l = r.conjecture_lower.holds;
    f.conj_l_eq = r.conjecture_lower.equality;
    f.conj_u = r.conjecture_upper.holds;
    f.conj_u_eq = r.conjecture_upper.equality;
    f.exception = r.is_exception;
    return f;
}

std::string to_csv(std::span<const FlatRow> rows) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += r.family + ',' + opt_str(r.param1) + ',' + opt_str(r.param2) + ',' + std::to_string(r.p) + ',' +
               std::to_string(r.g) + ',' + r.knot_class + ',' + opt_str(r.phi_tilde);
        for (auto member : bool_members()) {
            out += ',';
            out += bool_str(r.*member);
        }
        out += '\n';
    }
    return out;
}

std::vector<FlatRow> parse_csv(std::string_view text) {
    std::vector<FlatRow> rows;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!seen_header) {
            if (line != kCsvHeader) throw ParseError("csv: header row does not match the survey schema");
            seen_header = true;
            continue;
        }
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != kColumns.size())
            throw ParseError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(kColumns.size()) +
                             " fields, got " + std::to_string(fields.size()));
        FlatRow r;
        r.family = fields[0];
        r.param1 = parse_opt_int<std::int64_t>(fields[1], kColumns[1]);
        r.param2 = parse_opt_int<std::int64_t>(fields[2], kColumns[2]);
        r.p = parse_int<std::int64_t>(fields[3], kColumns[3]);
        r.g = parse_int<std::int64_t>(fields[4], kColumns[4]);
        r.knot_class = fields[5];
        r.phi_tilde = parse_opt_int<std::uint64_t>(fields[6], kColumns[6]);
        const auto members = bool_members();
        for (std::size_t k = 0; k < members.size(); ++k) r.*members[k] = parse_bool(fields[7 + k], kColumns[7 + k]);
        validate_names(r);
        rows.push_back(std::move(r));
    }
    if (!seen_header) throw ParseError("csv: missing header row");
    return rows;
}

std::string to_json(std::span<const FlatRow> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["family"] = r.family;
        obj["param1"] = r.param1 ? nlohmann::ordered_json(*r.param1) : nlohmann::ordered_json(nullptr);
        obj["param2"] = r.param2 ? nlohmann::ordered_json(*r.param2) : nlohmann::ordered_json(nullptr);
        obj["p"] = r.p;
        obj["g"] = r.g;
        obj["knot_class"] = r.knot_class;
        obj["phi_tilde"] = r.phi_tilde ? nlohmann::ordered_json(*r.phi_tilde) : nlohmann::ordered_json(nullptr);
        const auto members = bool_members();
        for (std::size_t k = 0; k < members.size(); ++k) obj[std::string(kColumns[7 + k])] = r.*members[k];
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<FlatRow> parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("json: expected an array of rows");

    auto opt_field = [](const nlohmann::json& obj, std::string_view key, auto tag) {
        using Int = decltype(tag);
        const auto& v = obj.at(std::string(key));
        if (v.is_null()) return std::optional<Int>{};
        if (!v.is_number_integer()) throw ParseError("json field '" + std::string(key) + "': expected integer");
        return std::optional<Int>{v.get<Int>()};
    };

    std::vector<FlatRow> rows;
    for (const auto& obj : doc) {
        if (!obj.is_object() || obj.size() != kColumns.size()) throw ParseError("json: row has wrong field set");
        try {
            FlatRow r;
            r.family = obj.at("family").get<std::string>();
            r.param1 = opt_field(obj, "param1", std::int64_t{});
            r.param2 = opt_field(obj, "param2", std::int64_t{});
            r.p = obj.at("p").get<std::int64_t>();
            r.g = obj.at("g").get<std::int64_t>();
            r.knot_class = obj.at("knot_class").get<std::string>();
            r.phi_tilde = opt_field(obj, "phi_tilde", std::uint64_t{});
            const auto members = bool_members();
            for (std::size_t k = 0; k < members.size(); ++k)
                r.*members[k] = obj.at(std::string(kColumns[7 + k])).get<bool>();
            validate_names(r);
            rows.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("json: ") + e.what());
        }
    }
    return rows;
}

std::string to_text(std::span<const FlatRow> rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << r.family << '(' << opt_str(r.param1);
        if (r.param2) os << ',' << *r.param2;
        os << ") p=" << r.p << " g=" << r.g << ' ' << r.knot_class;
        if (r.phi_tilde) os << " phi_tilde=" << *r.phi_tilde;
        os << " conj_l=" << bool_str(r.conj_l) << (r.conj_l_eq ? "(eq)" : "") << " conj_u=" << bool_str(r.conj_u)
           << (r.conj_u_eq ? "(eq)" : "");
        if (r.exception) os << " exception";
        os << '\n';
    }
    return os.str();
}

std::string scope_label(std::int64_t max_p, std::span<const Family> selected) {
    std::string names;
    for (Family f : selected) {
        if (!names.empty()) names += ',';
        names += families::to_string(f);
    }
    return "scope: closed-form families only [" + names + "], p <= " + std::to_string(max_p) +
           "; not the full Berge catalogue";
}

std::string summary_text(const ConjectureSummary& s) {
    std::ostringstream os;
    os << "hyperbolic rows: " << (s.satisfied.size() + s.exceptions.size() + s.violations.size())
       << " (non-hyperbolic excluded: " << s.excluded << ")\n";
    os << "satisfied: " << s.satisfied.size() << '\n';
    os << "exceptions: " << s.exceptions.size();
    for (const auto& row : s.exceptions) os << " (g=" << row.record.g << ", p=" << row.record.p << ')';
    os << '\n';
    os << "violations: " << s.violations.size() << '\n';
    if (!s.violations.empty()) {
        std::vector<FlatRow> flat;
        for (const auto& row : s.violations) flat.push_back(flatten(row));
        os << to_csv(flat);
    }
    return os.str();
}

}  // namespace lensbound::survey

#include "lensbound/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lensbound/bounds.hpp"
#include "lensbound/errors.hpp"
#include "lensbound/families.hpp"
#include "lensbound/modseq.hpp"
#include "lensbound/survey.hpp"

namespace lensbound::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

const char* bool_str(bool b) { return b ? "true" : "false"; }

modseq::DualKnotParams dual_from_flags(std::int64_t p, std::int64_t q, std::int64_t u) {
    if (p < 2) throw UsageError("--p must be at least 2");
    if (u < 1) throw UsageError("--u must be positive");
    return modseq::DualKnotParams::with_signed_q(static_cast<std::uint64_t>(p), q, static_cast<std::uint64_t>(u));
}

std::string render_profile(const modseq::InvariantProfile& prof, Format fmt) {
    const auto& c = prof.candidates;
    switch (fmt) {
        case Format::Text:
            return "psi=" + std::to_string(prof.psi) + " phi=" + std::to_string(prof.phi) +
                   " phi_tilde=" + std::to_string(prof.phi_tilde) + "\n";
        case Format::Csv:
            return "psi,phi,cand1,cand2,cand3,cand4,phi_tilde\n" + std::to_string(prof.psi) + ',' +
                   std::to_string(prof.phi) + ',' + std::to_string(c[0]) + ',' + std::to_string(c[1]) + ',' +
                   std::to_string(c[2]) + ',' + std::to_string(c[3]) + ',' + std::to_string(prof.phi_tilde) + "\n";
        case Format::Json: {
            ordered_json j;
            j["psi"] = prof.psi;
            j["phi"] = prof.phi;
            j["candidates"] = c;
            j["phi_tilde"] = prof.phi_tilde;
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::string render_hyperbolic(bool hyp, std::uint64_t phi_tilde, Format fmt) {
    switch (fmt) {
        case Format::Text:
            return std::string(bool_str(hyp)) + "\n";
        case Format::Csv:
            return "hyperbolic,phi_tilde\n" + std::string(bool_str(hyp)) + ',' + std::to_string(phi_tilde) + "\n";
        case Format::Json: {
            ordered_json j;
            j["hyperbolic"] = hyp;
            j["phi_tilde"] = phi_tilde;
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string{}; }

std::string render_records(const std::vector<families::SurgeryRecord>& recs, Format fmt) {
    std::ostringstream os;
    switch (fmt) {
        case Format::Text:
            for (const auto& r : recs) {
                os << families::to_string(r.family) << '(' << opt_str(r.params.first);
                if (r.params.second) os << ',' << *r.params.second;
                os << ") p=" << r.p << " g=" << r.g << ' ' << families::to_string(r.knot_class);
                if (r.dual) os << " dual=(" << r.dual->p() << ',' << r.dual->q() << ',' << r.dual->u() << ')';
                os << '\n';
            }
            break;
        case Format::Csv:
            os << "family,param1,param2,p,g,knot_class,dual_p,dual_q,dual_u\n";
            for (const auto& r : recs) {
                os << families::to_string(r.family) << ',' << opt_str(r.params.first) << ','
                   << opt_str(r.params.second) << ',' << r.p << ',' << r.g << ',' << families::to_string(r.knot_class)
                   << ',';
                if (r.dual) os << r.dual->p() << ',' << r.dual->q() << ',' << r.dual->u();
                else os << ",,";
                os << '\n';
            }
            break;
        case Format::Json: {
            auto arr = ordered_json::array();
            for (const auto& r : recs) {
                ordered_json j;
                j["family"] = families::to_string(r.family);
                j["param1"] = r.params.first ? ordered_json(*r.params.first) : ordered_json(nullptr);
                j["param2"] = r.params.second ? ordered_json(*r.params.second) : ordered_json(nullptr);
                j["p"] = r.p;
                j["g"] = r.g;
                j["knot_class"] = families::to_string(r.knot_class);
                j["dual_p"] = r.dual ? ordered_json(r.dual->p()) : ordered_json(nullptr);
                j["dual_q"] = r.dual ? ordered_json(r.dual->q()) : ordered_json(nullptr);
                j["dual_u"] = r.dual ? ordered_json(r.dual->u()) : ordered_json(nullptr);
                arr.push_back(std::move(j));
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

std::vector<std::pair<std::string_view, bounds::BoundCheck>> named_checks(const bounds::BoundReport& r) {
    return {{"kmos_lower", r.kmos_lower},
            {"rasmussen_upper", r.rasmussen_upper},
            {"gt_lower", r.gt_lower},
            {"gt_upper", r.gt_upper},
            {"gt_hyperbolic_upper", r.gt_hyperbolic_upper},
            {"torus_lower", r.torus_lower},
            {"satellite_lower", r.satellite_lower},
            {"conjecture_lower", r.conjecture_lower},
            {"conjecture_upper", r.conjecture_upper}};
}

std::string render_report(const bounds::BoundReport& rep, Format fmt) {
    std::ostringstream os;
    const auto checks = named_checks(rep);
    switch (fmt) {
        case Format::Text:
            for (const auto& [name, c] : checks)
                os << name << " holds=" << bool_str(c.holds) << " equality=" << bool_str(c.equality) << '\n';
            os << "exception=" << bool_str(rep.is_exception) << '\n';
            break;
        case Format::Csv:
            os << "bound,holds,equality\n";
            for (const auto& [name, c] : checks) os << name << ',' << bool_str(c.holds) << ',' << bool_str(c.equality) << '\n';
            os << "exception," << bool_str(rep.is_exception) << ',' << bool_str(rep.is_exception) << '\n';
            break;
        case Format::Json: {
            ordered_json j;
            for (const auto& [name, c] : checks) j[std::string(name)] = {{"holds", c.holds}, {"equality", c.equality}};
            j["is_exception"] = rep.is_exception;
            os << j.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

std::string render_identities(const bounds::IdentityResult& res, Format fmt) {
    const auto& f = res.failure;
    switch (fmt) {
        case Format::Text:
            if (res.ok) return "true\n";
            return "false: " + f->identity + " identity fails at (" + std::to_string(f->first) + ", " +
                   std::to_string(f->second) + ")\n";
        case Format::Csv:
            return std::string("ok,identity,first,second\n") + bool_str(res.ok) + ',' + (f ? f->identity : "") + ',' +
                   (f ? std::to_string(f->first) : "") + ',' + (f ? std::to_string(f->second) : "") + "\n";
        case Format::Json: {
            ordered_json j;
            j["ok"] = res.ok;
            if (f) j["failure"] = {{"identity", f->identity}, {"first", f->first}, {"second", f->second}};
            else j["failure"] = nullptr;
            return j.dump(2) + "\n";
        }
    }
    return {};
}

std::vector<families::Family> parse_family_list(const std::string& list) {
    std::vector<families::Family> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("--families: empty family name");
        out.push_back(families::family_from_string(item));
    }
    if (out.empty()) throw UsageError("--families: no families given");
    return out;
}

struct Flags {
    std::int64_t p = 0, q = 0, u = 0, g = 0;
    std::string name;
    std::int64_t from = 2, to = 2;
    std::int64_t r = 0, s = 0, a = 0, b = 0;
    int sign = -1;
    std::int64_t max = 0;
    std::int64_t max_p = survey::kDefaultMaxOrder;
    std::string family_list;
    unsigned threads = 0;
};

std::vector<families::SurgeryRecord> family_command(const Flags& fl, const CLI::App& sub) {
    using families::Family;
    std::vector<families::SurgeryRecord> recs;
    auto range = [&](auto make) {
        if (fl.from > fl.to) throw UsageError("--from must not exceed --to");
        for (std::int64_t j = fl.from; j <= fl.to; ++j) recs.push_back(make(j));
    };
    if (fl.name == "TorusEquality") {
        range(families::torus_equality_family);
        return recs;
    }
    const Family fam = families::family_from_string(fl.name);
    switch (fam) {
        case Family::TorusMoser:
            if (sub.count("--r") == 0 || sub.count("--s") == 0) throw UsageError("TorusMoser needs --r and --s");
            recs.push_back(families::torus_surgery(fl.r, fl.s, fl.sign));
            break;
        case Family::Type8:
            if (sub.count("--a") == 0 || sub.count("--b") == 0) throw UsageError("Type8 needs --a and --b");
            recs.push_back(families::type8(fl.a, fl.b));
            break;
        case Family::Type8LowerFamily:
            range(families::type8_lower_family);
            break;
        case Family::Type5Family:
            range(families::type5_family);
            break;
        case Family::CableSatellite:
            range(families::cable_family);
            break;
        case Family::PretzelPoint:
            recs.push_back(families::pretzel_point());
            break;
    }
    return recs;
}

int survey_command(const Flags& fl, Format fmt, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto selected = fl.family_list.empty() ? survey::all_families() : parse_family_list(fl.family_list);
    if (fl.max_p < 1) throw UsageError("--max-p must be positive");

    const auto rows = survey::enumerate(fl.max_p, selected, fl.threads);
    std::vector<survey::FlatRow> flat;
    flat.reserve(rows.size());
    for (const auto& row : rows) flat.push_back(survey::flatten(row));

    const auto summary = survey::conjecture_report(rows);
    const std::string scope = survey::scope_label(fl.max_p, selected);

    std::string body;
    switch (fmt) {
        case Format::Csv: body = survey::to_csv(flat); break;
        case Format::Json: body = survey::to_json(flat); break;
        case Format::Text: body = "# " + scope + "\n" + survey::to_text(flat) + survey::summary_text(summary); break;
    }

    if (out_path.empty()) {
        out << body;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open --out path '" + out_path + "'");
        file << body;
    }
    if (fmt != Format::Text) err << "# " << scope << '\n' << survey::summary_text(summary);
    return summary.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual-knot invariants and order-versus-genus bounds for lens space surgeries", "lensbound"};
    app.require_subcommand(1);

    Flags fl;
    Format fmt = Format::Text;
    std::string out_path;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    auto* inv = app.add_subcommand("invariants", "Print psi, phi and phi_tilde for K(L(p,q);u)");
    auto* hyp = app.add_subcommand("hyperbolic", "Hyperbolicity certificate phi_tilde >= 2");
    for (auto* sub : {inv, hyp}) {
        sub->add_option("--p", fl.p, "Lens space order")->required();
        sub->add_option("--q", fl.q, "Lens space parameter")->required();
        sub->add_option("--u", fl.u, "Dual knot parameter")->required();
        add_format(sub);
    }

    auto* fam = app.add_subcommand("family", "Generate surgery records for one family");
    fam->add_option("--name", fl.name,
                    "TorusMoser, TorusEquality, Type8, Type8LowerFamily, Type5Family, CableSatellite, PretzelPoint")
        ->required();
    fam->add_option("--from", fl.from, "First family index j");
    fam->add_option("--to", fl.to, "Last family index j");
    fam->add_option("--r", fl.r, "TorusMoser r");
    fam->add_option("--s", fl.s, "TorusMoser s");
    fam->add_option("--sign", fl.sign, "TorusMoser surgery sign (+1 or -1)");
    fam->add_option("--a", fl.a, "Type8 a");
    fam->add_option("--b", fl.b, "Type8 b");
    add_format(fam);

    auto* chk = app.add_subcommand("check", "Evaluate every bound at (p, g)");
    chk->add_option("--p", fl.p, "Order |p|")->required();
    chk->add_option("--g", fl.g, "Seifert genus")->required();
    add_format(chk);

    auto* ids = app.add_subcommand("identities", "Verify the proof identities up to --max");
    ids->add_option("--max", fl.max, "Largest parameter")->required();
    add_format(ids);

    auto* sur = app.add_subcommand("survey", "Enumerate families and test the conjectured bounds");
    sur->add_option("--max-p", fl.max_p, "Largest order p")->capture_default_str();
    sur->add_option("--families", fl.family_list, "Comma-separated family tags (default: all)");
    sur->add_option("--out", out_path, "Write rows to this file instead of stdout");
    sur->add_option("--threads", fl.threads, "Worker threads (0 = hardware)");
    add_format(sur);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (inv->parsed()) {
            out << render_profile(modseq::invariant_profile(dual_from_flags(fl.p, fl.q, fl.u)), fmt);
        } else if (hyp->parsed()) {
            const auto prof = modseq::invariant_profile(dual_from_flags(fl.p, fl.q, fl.u));
            out << render_hyperbolic(prof.phi_tilde >= 2, prof.phi_tilde, fmt);
        } else if (fam->parsed()) {
            out << render_records(family_command(fl, *fam), fmt);
        } else if (chk->parsed()) {
            if (fl.p < 1) throw UsageError("--p must be positive");
            if (fl.g < 0) throw UsageError("--g must be non-negative");
            out << render_report(bounds::evaluate_all(fl.p, fl.g), fmt);
        } else if (ids->parsed()) {
            if (fl.max < 2) throw UsageError("--max must be at least 2");
            const auto res = bounds::verify_proof_identities(fl.max);
            out << render_identities(res, fmt);
            return res.ok ? kExitOk : kExitViolation;
        } else if (sur->parsed()) {
            if (sur->count("--format") == 0) fmt = Format::Csv;
            return survey_command(fl, fmt, out_path, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "certificate failure: " << e.what() << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace lensbound::cli

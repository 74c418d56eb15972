#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 inadmissible
// triple without --force, 3 internal self-check failure.

#include "k3scroll/k3scroll.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace k3scroll::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInadmissible = 2, kSelfCheck = 3 };

struct GenusRange {
    std::int64_t lo;
    std::int64_t hi;
};

/// "a..b" (inclusive) or a single integer "a".
inline GenusRange parse_range(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) {
            throw std::invalid_argument("malformed range '" + text + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = parse_int(text);
        return {v, v};
    }
    GenusRange out{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (out.lo > out.hi) throw std::invalid_argument("empty range '" + text + "'");
    return out;
}

/// Run one command line (arguments after the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of Lazarsfeld-Mukai scrolls over K3 surfaces", "k3scroll"};
    app.require_subcommand(1);

    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json | csv | markdown")
            ->check(CLI::IsMember({"json", "csv", "markdown", "md"}));
    };

    std::int64_t g = 0, r = 1, d = 0, r_max = 1;
    bool force = false;
    std::string g_range;
    std::string kind;

    auto* inv = app.add_subcommand("invariants", "All invariants of one (g, r, d) triple");
    inv->add_option("--g", g, "genus of the polarization")->required();
    inv->add_option("--r", r, "projective dimension of the linear series")->required();
    inv->add_option("--d", d, "degree of the linear series")->required();
    inv->add_flag("--force", force, "evaluate formulas on numerically inadmissible triples");
    add_format(inv);

    auto* en = app.add_subcommand("enumerate", "Admissible (r, d) for a genus with key invariants");
    en->add_option("--g", g, "genus")->required();
    en->add_option("--r-max,--r", r_max, "largest r to enumerate");
    add_format(en);

    auto* au = app.add_subcommand("audit", "Reconcile printed claims with derived values");
    au->add_option("--g", g_range, "genus range a..b")->required();
    au->add_option("--r-max,--r", r_max, "largest r on the grid");
    add_format(au);

    auto* tb = app.add_subcommand("table", "Per-genus tables: gonality, mukai, ruled");
    tb->add_option("kind,--kind", kind, "gonality | mukai | ruled")->required();
    tb->add_option("--g", g_range, "genus range a..b")->required();
    add_format(tb);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (inv->parsed()) {
            const Check check = force ? Check::force : Check::require;
            const Json doc = invariants_json(g, r, d, check);
            if (force && !doc["flags"]["admissible"].get<bool>()) {
                err << "warning: " << admissible(g, r, d).summary() << " (forced)\n";
            }
            out << render(doc, fmt);
        } else if (en->parsed()) {
            out << render(enumerate_json(g, r_max), fmt, "rows");
        } else if (au->parsed()) {
            const GenusRange range = parse_range(g_range);
            const AuditReport report = run_audit(range.lo, range.hi, r_max);
            out << render(audit_json(report), fmt, "records");
            if (!report.self_check_ok()) {
                err << "self-check failed: an always-matching claim did not match\n";
                return kSelfCheck;
            }
        } else if (tb->parsed()) {
            const GenusRange range = parse_range(g_range);
            out << render(table_json(parse_table_kind(kind), range.lo, range.hi), fmt, "rows");
        }
    } catch (const InadmissibleError& ex) {
        err << ex.what() << "\n";
        return kInadmissible;
    } catch (const SelfCheckError& ex) {
        err << "self-check failed: " << ex.what() << "\n";
        return kSelfCheck;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& ex) {
        err << "error: " << ex.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace k3scroll::cli

#pragma once

// JSON / CSV / Markdown rendering of reports. JSON objects keep insertion
// order so that output is byte-stable; CSV and Markdown are derived from the
// same ordered JSON by flattening nested keys with dots.

#include "k3scroll/audit.hpp"
#include "k3scroll/brill_noether.hpp"
#include "k3scroll/rational.hpp"
#include "k3scroll/scroll.hpp"
#include "k3scroll/sheaf.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3scroll {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, markdown };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "markdown" || s == "md") return OutputFormat::markdown;
    throw std::invalid_argument("unknown format '" + s + "' (json, csv or markdown)");
}

/// Integers become JSON numbers; anything else becomes the string "p/q".
inline Json rational_json(const Rational& q) {
    if (is_integer(q)) {
        const BigInt& num = boost::multiprecision::numerator(q);
        if (num <= std::numeric_limits<std::int64_t>::max() &&
            num >= std::numeric_limits<std::int64_t>::min()) {
            return num.convert_to<std::int64_t>();
        }
    }
    return to_string(q);
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

inline Json sheaf_json(const K3Context& ctx, const SheafData& s) {
    const MukaiVector v = mukai_vector(ctx, s);
    Json out;
    out["rank"] = s.rank;
    out["c1_mult"] = s.c1_mult;
    out["c2"] = s.c2_pts;
    out["h0"] = optional_json(s.h0);
    out["mukai"] = Json::array({v.r0, v.c1_mult, to_int64(v.s, "Mukai vector s")});
    return out;
}

inline Json scroll_json(const ScrollReport& s) {
    Json out;
    out["R"] = s.R;
    out["delta_symbolic"] = s.delta_symbolic;
    out["delta_printed"] = s.delta_printed;
    out["rho"] = s.rho;
    out["dim_Mv"] = s.dim_Mv;
    out["h1_TP"] = s.h1_TP;
    out["h0_N"] = s.h0_N;
    out["hilb_dim"] = s.hilb_dim;
    return out;
}

inline Json ruled_json(const RuledReport& s) {
    Json out;
    out["h0_restricted"] = s.h0_restricted;
    out["degree_sigma"] = s.degree_sigma;
    out["n"] = optional_json(s.n);
    out["h"] = optional_json(s.h);
    out["hilb_dim_ruled"] = optional_json(s.hilb_dim_ruled);
    out["kd_bound"] = optional_json(s.kd_bound);
    out["kd_strict"] = optional_json(s.kd_strict);
    out["unisecant_dim"] = optional_json(s.unisecant_dim);
    return out;
}

/// Every invariant of the triple. With Check::force the formulas are
/// evaluated even when the triple is not numerically admissible.
inline Json invariants_json(std::int64_t g, std::int64_t r, std::int64_t d, Check check) {
    const Admissibility adm = admissible(g, r, d);
    if (!adm && check == Check::require) throw InadmissibleError(adm);
    const K3Context ctx(g);
    Json out;
    out["params"] = {{"g", g}, {"r", r}, {"d", d}};
    out["bundle_E"] = sheaf_json(ctx, lm_bundle(g, r, d, check));
    out["bundle_F"] = sheaf_json(ctx, twisted_lm_bundle(g, r, d, check));
    out["scroll"] = scroll_json(scroll_report(g, r, d, check));
    out["ruled"] = ruled_json(sigma_invariants(g, r, d, check));
    out["flags"] = {{"admissible", adm.admissible},
                    {"forced", check == Check::force},
                    {"reasons", adm.reasons}};
    return out;
}

inline Json enumerate_json(std::int64_t g, std::int64_t r_max) {
    Json rows = Json::array();
    for (const BNTriple& t : enumerate_admissible(g, r_max)) {
        const ScrollReport s = scroll_report(t.g, t.r, t.d);
        Json row;
        row["r"] = t.r;
        row["d"] = t.d;
        row["rho"] = t.rho;
        row["R"] = s.R;
        row["delta_symbolic"] = s.delta_symbolic;
        row["delta_printed"] = s.delta_printed;
        row["dim_Mv"] = s.dim_Mv;
        row["hilb_dim"] = s.hilb_dim;
        rows.push_back(std::move(row));
    }
    Json out;
    out["params"] = {{"g", g}, {"r_max", r_max}};
    out["rows"] = std::move(rows);
    return out;
}

inline Json claim_json(const ClaimRecord& rec) {
    Json out;
    out["id"] = rec.id;
    out["g"] = rec.g;
    out["r"] = rec.r;
    out["d"] = rec.d;
    out["printed"] = rational_json(rec.printed_value);
    out["derived"] = rational_json(rec.derived_value);
    out["status"] = to_string(rec.status);
    out["delta"] = rec.delta ? rational_json(*rec.delta) : Json(nullptr);
    out["location"] = rec.location;
    out["quote"] = rec.quote;
    out["detail"] = rec.detail;
    return out;
}

inline Json audit_json(const AuditReport& report) {
    Json out;
    out["params"] = {{"g_min", report.g_min}, {"g_max", report.g_max}, {"r_max", report.r_max}};
    Json summary;
    for (const auto& [status, count] : report.summary()) summary[to_string(status)] = count;
    summary["total"] = report.records.size();
    out["summary"] = std::move(summary);
    out["self_check_ok"] = report.self_check_ok();
    Json records = Json::array();
    for (const auto& rec : report.records) records.push_back(claim_json(rec));
    out["records"] = std::move(records);
    return out;
}

enum class TableKind { gonality, mukai, ruled };

inline TableKind parse_table_kind(const std::string& s) {
    if (s == "gonality") return TableKind::gonality;
    if (s == "mukai") return TableKind::mukai;
    if (s == "ruled") return TableKind::ruled;
    throw std::invalid_argument("unknown table kind '" + s + "' (gonality, mukai or ruled)");
}

inline Json table_json(TableKind kind, std::int64_t g_min, std::int64_t g_max) {
    if (g_min < K3Context::kMinGenus || g_min > g_max) {
        throw std::invalid_argument("table range needs 3 <= g_min <= g_max");
    }
    Json rows = Json::array();
    std::string name;
    for (std::int64_t g = g_min; g <= g_max; ++g) {
        Json row;
        row["g"] = g;
        switch (kind) {
            case TableKind::gonality: {
                name = "gonality";
                const std::int64_t gamma = gonality(g);
                row["gamma"] = gamma;
                row["rho"] = rho(g, 1, gamma);
                break;
            }
            case TableKind::mukai: {
                name = "mukai";
                const MukaiClass m = mukai_classification(g);
                row["dominant"] = to_string(m.dominant);
                row["gen_finite"] = to_string(m.gen_finite);
                row["note"] = m.note;
                break;
            }
            case TableKind::ruled: {
                name = "ruled";
                const std::int64_t n = 6 * g - 6;
                row["n"] = n;
                row["h"] = 4 * g - 5;
                row["dim_H"] = hilb_dim_ruled(n, g);
                break;
            }
        }
        rows.push_back(std::move(row));
    }
    Json out;
    out["kind"] = name;
    out["params"] = {{"g_min", g_min}, {"g_max", g_max}};
    out["rows"] = std::move(rows);
    return out;
}

// ---------------------------------------------------------------------------
// Flattening and text formats

using FlatRow = std::vector<std::pair<std::string, std::string>>;

inline std::string scalar_text(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

/// Nested objects become dotted keys; numeric arrays are indexed (`mukai.0`)
/// and string arrays collapse into one "; "-separated cell.
inline void flatten(const Json& v, const std::string& prefix, FlatRow& out) {
    auto join = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) flatten(child, join(key), out);
    } else if (v.is_array() &&
               std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_string(); })) {
        std::string cell;
        for (const auto& e : v) cell += (cell.empty() ? "" : "; ") + e.get<std::string>();
        out.emplace_back(prefix, cell);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], join(std::to_string(i)), out);
    } else {
        out.emplace_back(prefix, scalar_text(v));
    }
}

inline FlatRow flatten(const Json& v) {
    FlatRow out;
    flatten(v, "", out);
    return out;
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Header row from the first row's keys, then one line per row.
inline std::string csv_table(const std::vector<FlatRow>& rows) {
    std::ostringstream os;
    if (rows.empty()) return {};
    for (std::size_t i = 0; i < rows.front().size(); ++i) {
        os << (i ? "," : "") << csv_cell(rows.front()[i].first);
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i].second);
        os << '\n';
    }
    return os.str();
}

inline std::string markdown_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c == '\n' ? ' ' : c;
    }
    return out;
}

/// Pipe table with every column padded to its widest cell.
inline std::string markdown_table(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 3);
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = std::max(width[i], header[i].size());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << '|';
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string cell = i < cells.size() ? cells[i] : "";
            os << ' ' << cell << std::string(width[i] - cell.size(), ' ') << " |";
        }
        os << '\n';
    };
    line(header);
    os << '|';
    for (std::size_t w : width) os << std::string(w + 2, '-') << '|';
    os << '\n';
    for (const auto& row : rows) line(row);
    return os.str();
}

inline std::string markdown_rows(const std::vector<FlatRow>& rows) {
    if (rows.empty()) return {};
    std::vector<std::string> header;
    for (const auto& [key, _] : rows.front()) header.push_back(markdown_cell(key));
    std::vector<std::vector<std::string>> body;
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (const auto& [_, value] : row) cells.push_back(markdown_cell(value));
        body.push_back(std::move(cells));
    }
    return markdown_table(header, body);
}

/// Render a document whose `rows_key` array holds one entity per row.
/// Without a rows key the whole document is one entity.
inline std::string render(const Json& doc, OutputFormat format, const std::string& rows_key = {}) {
    if (format == OutputFormat::json) return doc.dump(2) + "\n";

    std::vector<FlatRow> rows;
    if (rows_key.empty()) {
        rows.push_back(flatten(doc));
    } else {
        for (const auto& row : doc.at(rows_key)) rows.push_back(flatten(row));
    }
    if (format == OutputFormat::csv) return csv_table(rows);

    std::ostringstream os;
    if (rows_key.empty()) {
        std::vector<std::vector<std::string>> body;
        for (const auto& [key, value] : rows.front()) {
            body.push_back({markdown_cell(key), markdown_cell(value)});
        }
        os << markdown_table({"field", "value"}, body);
        return os.str();
    }
    for (const auto& [key, value] : doc.items()) {
        if (key == rows_key) continue;
        FlatRow meta;
        flatten(value, key, meta);
        for (const auto& [k, v] : meta) os << "- " << k << ": " << v << '\n';
    }
    os << '\n' << markdown_rows(rows);
    return os.str();
}

}  // namespace k3scroll

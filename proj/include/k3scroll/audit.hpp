#pragma once

// Registry of printed quantitative claims about Lazarsfeld-Mukai scrolls, each
// evaluated against an independent computation path. Statuses are mechanical
// comparisons of two numbers; the registry is compiled in.

#include "k3scroll/brill_noether.hpp"
#include "k3scroll/chow.hpp"
#include "k3scroll/proj_bundle.hpp"
#include "k3scroll/rational.hpp"
#include "k3scroll/scroll.hpp"
#include "k3scroll/sheaf.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace k3scroll {

enum class ClaimStatus { match, mismatch, not_derivable };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::match: return "MATCH";
        case ClaimStatus::mismatch: return "MISMATCH";
        case ClaimStatus::not_derivable: return "NOT_DERIVABLE";
    }
    return "NOT_DERIVABLE";
}

struct ClaimRecord {
    std::string id;
    std::string location;
    std::string quote;
    std::int64_t g = 0, r = 0, d = 0;
    Rational printed_value;
    Rational derived_value;
    ClaimStatus status = ClaimStatus::not_derivable;
    std::optional<Rational> delta;  // printed - derived; absent when not derivable
    std::string detail;
};

/// Fill status and delta from the two values.
inline ClaimRecord& settle(ClaimRecord& rec) {
    rec.delta = rec.printed_value - rec.derived_value;
    rec.status = *rec.delta == 0 ? ClaimStatus::match : ClaimStatus::mismatch;
    return rec;
}

struct ClaimSpec {
    std::string_view id;
    std::string_view location;
    std::string_view quote;
    bool always_match;  // a mismatch here is a library bug
    bool pencils_only;  // evaluated for r = 1 only
};

inline constexpr std::array<ClaimSpec, 9> kClaimRegistry{{
    {"DEGREE", "lemma on the top self-intersection of the tautological class",
     R"($\xi^{r+2} = c_1({\mathcal F})^2 - c_2({\mathcal F}) = (g-1) (3r^2 + 5r + 8) - d$)", false,
     false},
    {"R-FORM", "embedding dimension of the scroll",
     R"($R = h^0({\mathcal F}) -1 = (r+1)(g+1) + 3(g-1) - (d+1)$)", true, false},
    {"HILB-DIM", "dimension of the Hilbert scheme component vs. h^0 of the normal bundle",
     R"(${\rm dim} ({\mathcal H}_{r+2, \delta}) = 18 + 2 g - 2 (r+1)(g+r-d) + (R+1)^2$)", true,
     false},
    {"SIGMA", "sections of F restricted to C",
     R"($h^0({\mathcal F}|_C) = (R+1) - (2r+g-d+1) = (r+3) (g-1)$)", true, false},
    {"EXPDIM", "dimension of the moduli space of F",
     R"($\dim ({\mathcal M}_{v({\mathcal F})} (S, L)) = 2 \rho({\mathcal A})$)", true, false},
    {"EXPDIM-CLAMP", "expected dimension of moduli of sheaves, clamped form",
     R"(${\rm min} \{ -1, 2\,r\,c_2 - (r-1)\,c_1^2 - 2\,(r^2-1) \}$)", false, false},
    {"KD-STRICT", "parameter count for K_d against dim H_{6g-6,g}",
     R"($18 - g - 4 + 4 d + (h+1)^2 < 7(g-1) + (h+1)^2$)", false, true},
    {"CORO-AMBIENT", "ambient space of the threefold scrolls for r = 1",
     R"(${\mathbb P}^{5g-1-d}$)", false, true},
    {"INTRO-SUM", "Hilbert scheme dimension as dim(B_g) + g + dim(M_v(S))",
     R"($\dim({\mathcal B}_g)$, $g$ and $\dim(M_v(S))$)", false, false},
}};

inline const ClaimSpec& claim_spec(std::string_view id) {
    for (const auto& c : kClaimRegistry) {
        if (c.id == id) return c;
    }
    throw std::out_of_range("unknown claim " + std::string(id));
}

namespace detail {

inline void evaluate_claim(const ClaimSpec& spec, std::int64_t g, std::int64_t r, std::int64_t d,
                           ClaimRecord& rec) {
    const K3Context ctx(g);
    const SheafData e = lm_bundle(g, r, d);
    const SheafData f = twist_by_L(ctx, e, 1);
    const Rational h0_F = riemann_roch_k3(ctx, f);
    const std::int64_t R_rr = to_int64(h0_F - 1, "R");
    const std::int64_t p = rho(g, r, d);

    if (spec.id == "DEGREE") {
        rec.printed_value = scroll_degree(g, r, d).printed;
        rec.derived_value = top_self_intersection(ctx, bundle_chern(f));
        rec.detail = "2r^2(g-1) = " + std::to_string(2 * r * r * (g - 1));
    } else if (spec.id == "R-FORM") {
        rec.printed_value = (r + 1) * (g + 1) + 3 * (g - 1) - (d + 1);
        rec.derived_value = h0_F - 1;
    } else if (spec.id == "HILB-DIM") {
        rec.printed_value = hilb_dim_theorem_printed(g, r, d);
        rec.derived_value = h0_normal_bundle(g, r, d);
    } else if (spec.id == "SIGMA") {
        rec.printed_value = (r + 3) * (g - 1);
        rec.derived_value = h0_F - *e.h0;
    } else if (spec.id == "EXPDIM") {
        rec.printed_value = dim_moduli(g, r, d);
        rec.derived_value = expected_dim_raw(ctx, e);
    } else if (spec.id == "EXPDIM-CLAMP") {
        rec.printed_value = expected_dim_clamped(ctx, e);
        rec.derived_value = dim_moduli(g, r, d);
        rec.detail = "raw expected dimension " + std::to_string(expected_dim_raw(ctx, e));
    } else if (spec.id == "KD-STRICT") {
        const KdBound kd = kd_dim_bound(g, d);
        const std::int64_t hilb = hilb_dim_ruled(6 * g - 6, g);
        rec.printed_value = 1;
        rec.derived_value = kd.strict ? 1 : 0;
        rec.detail = std::to_string(kd.bound) + (kd.strict ? " < " : " >= ") + std::to_string(hilb);
    } else if (spec.id == "CORO-AMBIENT") {
        rec.printed_value = corollary_ambient_dim_printed(g, d);
        rec.derived_value = R_rr;
    } else if (spec.id == "INTRO-SUM") {
        rec.printed_value = ctx.dim_moduli_k3() + g + 2 * p;
        rec.derived_value = hilb_dim_scroll(g, r, d) - ((R_rr + 1) * (R_rr + 1) - 1);
    } else {
        throw std::out_of_range("unregistered claim " + std::string(spec.id));
    }
    settle(rec);
}

}  // namespace detail

/// Evaluate one registered claim at one admissible triple. A failure inside
/// the derivation yields NOT_DERIVABLE with the reason in `detail`.
inline ClaimRecord evaluate_claim(std::string_view id, std::int64_t g, std::int64_t r,
                                  std::int64_t d) {
    const ClaimSpec& spec = claim_spec(id);
    ClaimRecord rec;
    rec.id = spec.id;
    rec.location = spec.location;
    rec.quote = spec.quote;
    rec.g = g;
    rec.r = r;
    rec.d = d;
    try {
        detail::evaluate_claim(spec, g, r, d, rec);
    } catch (const std::exception& ex) {
        rec.status = ClaimStatus::not_derivable;
        rec.delta.reset();
        rec.detail = ex.what();
    }
    return rec;
}

struct AuditReport {
    std::int64_t g_min = 0, g_max = 0, r_max = 0;
    std::vector<ClaimRecord> records;

    std::map<ClaimStatus, std::size_t> summary() const {
        std::map<ClaimStatus, std::size_t> counts{
            {ClaimStatus::match, 0}, {ClaimStatus::mismatch, 0}, {ClaimStatus::not_derivable, 0}};
        for (const auto& rec : records) ++counts[rec.status];
        return counts;
    }

    /// True when every claim registered as always-matching did match.
    bool self_check_ok() const {
        for (const auto& rec : records) {
            if (claim_spec(rec.id).always_match && rec.status != ClaimStatus::match) return false;
        }
        return true;
    }
};

/// Evaluate every registered claim on every admissible triple with
/// g_min <= g <= g_max and 1 <= r <= r_max, in (g, r, d, registry) order.
inline AuditReport run_audit(std::int64_t g_min, std::int64_t g_max, std::int64_t r_max) {
    if (g_min < K3Context::kMinGenus || g_min > g_max || r_max < 1) {
        throw std::invalid_argument("audit grid needs 3 <= g_min <= g_max and r_max >= 1");
    }
    AuditReport report{g_min, g_max, r_max, {}};
    for (std::int64_t g = g_min; g <= g_max; ++g) {
        for (const BNTriple& t : enumerate_admissible(g, r_max)) {
            for (const ClaimSpec& spec : kClaimRegistry) {
                if (spec.pencils_only && t.r != 1) continue;
                report.records.push_back(evaluate_claim(spec.id, t.g, t.r, t.d));
            }
        }
    }
    if (report.records.empty()) throw std::invalid_argument("audit grid is empty");
    return report;
}

/// The smooth K3 scroll in P^R: invert R(g, 1, d) = R and test whether the
/// resulting degree is admissible. The printed conclusion is that it is not
/// (printed value 0); the derived value is 1 when the triple is admissible.
inline ClaimRecord ottaviani_check(std::int64_t g = 8, std::int64_t R = 5) {
    ClaimRecord rec;
    rec.id = "OTTAVIANI";
    rec.location = "remark on the degree-9 K3 scroll in P^5";
    rec.quote = R"($R=5$ ... $d = 33$)";
    rec.g = g;
    rec.r = 1;
    rec.d = invert_embedding_dim(g, 1, R);
    const Admissibility adm = admissible(g, 1, rec.d);
    rec.printed_value = 0;
    rec.derived_value = adm.admissible ? 1 : 0;
    rec.detail = "R = " + std::to_string(R) + " forces d = " + std::to_string(rec.d) + "; " +
                 adm.summary();
    return settle(rec);
}

}  // namespace k3scroll

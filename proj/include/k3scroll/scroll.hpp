#pragma once

// Numeric invariants of the scroll P(F) embedded in P^R by |O(1)|, of its
// Hilbert scheme component, and of the ruled surface cut out over a curve
// C in |L| (the r = 1 genus-g scrolls in P^h).

#include "k3scroll/brill_noether.hpp"
#include "k3scroll/chow.hpp"
#include "k3scroll/proj_bundle.hpp"
#include "k3scroll/sheaf.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3scroll {

/// R = h^0(F) - 1 = (r+1)(g+1) + 3(g-1) - (d+1), checked against
/// Riemann-Roch for F = E(L).
inline std::int64_t embedding_dim_R(std::int64_t g, std::int64_t r, std::int64_t d,
                                    Check check = Check::require) {
    require_admissible(g, r, d, check);
    const std::int64_t closed = (r + 1) * (g + 1) + 3 * (g - 1) - (d + 1);
    const K3Context ctx(g);
    const SheafData e = SheafData::chern(r + 1, 1, d);
    const Rational rr = riemann_roch_k3(ctx, twist_by_L(ctx, e, 1)) - 1;
    if (Rational(closed) != rr) {
        throw SelfCheckError("R closed form " + std::to_string(closed) +
                             " disagrees with Riemann-Roch " + to_string(rr));
    }
    return closed;
}

/// Solve R(g, r, d) = R for d. No admissibility check: the point is to test it.
inline std::int64_t invert_embedding_dim(std::int64_t g, std::int64_t r, std::int64_t R) {
    return (r + 1) * (g + 1) + 3 * (g - 1) - 1 - R;
}

/// The ambient dimension 5g - 1 - d printed for the r = 1 threefold scrolls.
inline std::int64_t corollary_ambient_dim_printed(std::int64_t g, std::int64_t d) {
    return 5 * g - 1 - d;
}

struct ScrollDegree {
    std::int64_t symbolic;  // xi^(r+2) by Grothendieck reduction
    std::int64_t printed;   // (g-1)(3r^2 + 5r + 8) - d
};

/// Both values are returned side by side and never reconciled.
inline ScrollDegree scroll_degree(std::int64_t g, std::int64_t r, std::int64_t d,
                                  Check check = Check::require) {
    require_admissible(g, r, d, check);
    const K3Context ctx(g);
    const SheafData e = SheafData::chern(r + 1, 1, d);
    const SheafData f = twist_by_L(ctx, e, 1);
    const Rational top = top_self_intersection(ctx, bundle_chern(f));
    return {to_int64(top, "scroll degree"), (g - 1) * (3 * r * r + 5 * r + 8) - d};
}

struct TangentCohomology {
    std::int64_t h0;      // dim of the automorphism group of P preserving the ruling
    std::int64_t h1;      // 2 rho + 20
    std::int64_t h_rest;  // h^i for i >= 2
};

inline TangentCohomology tangent_cohomology(std::int64_t g, std::int64_t r, std::int64_t d,
                                            Check check = Check::require) {
    require_admissible(g, r, d, check);
    return {0, 2 * rho(g, r, d) + 20, 0};
}

/// The Hilbert-scheme dimension as printed in the theorem:
/// 18 + 2g - 2(r+1)(g+r-d) + (R+1)^2.
inline std::int64_t hilb_dim_theorem_printed(std::int64_t g, std::int64_t r, std::int64_t d,
                                             Check check = Check::require) {
    const std::int64_t R = embedding_dim_R(g, r, d, check);
    return 18 + 2 * g - 2 * (r + 1) * (g + r - d) + (R + 1) * (R + 1);
}

/// h^0 of the normal bundle of P in P^R, 18 + 2g - 2(r+1)(r+g-d) + (R+1)^2,
/// obtained from the Euler sequence and h^1(T_P).
inline std::int64_t h0_normal_bundle(std::int64_t g, std::int64_t r, std::int64_t d,
                                     Check check = Check::require) {
    const std::int64_t R = embedding_dim_R(g, r, d, check);
    const TangentCohomology t = tangent_cohomology(g, r, d, check);
    // h^i(N) = 0 for i >= 1, so h0(N) = chi(T_{P^R}|P) - chi(T_P), where
    // h0(T_{P^R}|P) = (R+1)^2 - 1 and h1(T_{P^R}|P) = 1 by the Euler sequence.
    const std::int64_t chi_ambient = ((R + 1) * (R + 1) - 1) - 1;
    const std::int64_t chi_tangent = t.h0 - t.h1;
    return chi_ambient - chi_tangent;
}

/// dim H_{r+2, delta} = 18 + 2 rho + (R+1)^2, checked against h0(N).
inline std::int64_t hilb_dim_scroll(std::int64_t g, std::int64_t r, std::int64_t d,
                                    Check check = Check::require) {
    const std::int64_t R = embedding_dim_R(g, r, d, check);
    const std::int64_t dim = 18 + 2 * rho(g, r, d) + (R + 1) * (R + 1);
    if (const auto n = h0_normal_bundle(g, r, d, check); n != dim) {
        throw SelfCheckError("h0(N) = " + std::to_string(n) + " but dim H = " + std::to_string(dim));
    }
    return dim;
}

/// dim H_{n,g} for linearly normal non-special scrolls of genus g and degree n.
inline std::int64_t hilb_dim_ruled(std::int64_t n, std::int64_t g) {
    if (g < 0) throw std::invalid_argument("genus must be >= 0");
    const std::int64_t k = std::min<std::int64_t>(1, g - 1);
    const std::int64_t lower = 2 * g + 3 + k;
    if (n < lower) {
        throw std::invalid_argument("degree n = " + std::to_string(n) + " below 2g+3+k = " +
                                    std::to_string(lower));
    }
    return 7 * (g - 1) + (n - 2 * g + 2) * (n - 2 * g + 2);
}

inline void require_gonality_window(std::int64_t g, std::int64_t d) {
    if (g < K3Context::kMinGenus) throw std::invalid_argument("g must be >= 3");
    const std::int64_t gamma = gonality(g);
    if (d < gamma || d > g) {
        throw std::invalid_argument("d = " + std::to_string(d) + " outside gonality window [" +
                                    std::to_string(gamma) + ", " + std::to_string(g) + "]");
    }
}

struct KdBound {
    std::int64_t bound;
    bool strict;  // bound < dim H_{6g-6, g}
};

/// Parameter count 18 + g + 2 rho(g,1,d) + (h+1)^2 for the family K_d of
/// genus-g scrolls, compared with dim H_{6g-6, g}.
inline KdBound kd_dim_bound(std::int64_t g, std::int64_t d) {
    require_gonality_window(g, d);
    const std::int64_t h = 4 * g - 5;
    const std::int64_t bound = 18 + g + 2 * rho(g, 1, d) + (h + 1) * (h + 1);
    if (bound != 14 - g + 4 * d + (4 * g - 4) * (4 * g - 4)) {
        throw SelfCheckError("K_d bound closed form disagrees");
    }
    return {bound, bound < hilb_dim_ruled(6 * g - 6, g)};
}

/// dim |I_Z(L)| = g + 2 - d.
inline std::int64_t unisecant_family_dim(std::int64_t g, std::int64_t d) {
    require_gonality_window(g, d);
    return g + 2 - d;
}

struct RuledReport {
    std::int64_t g = 0, r = 0, d = 0;
    std::int64_t h0_restricted = 0;  // h^0(F|_C)
    std::int64_t degree_sigma = 0;   // deg c1(F|_C)
    // r = 1 only:
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> h;
    std::optional<std::int64_t> hilb_dim_ruled;
    std::optional<std::int64_t> kd_bound;
    std::optional<bool> kd_strict;
    std::optional<std::int64_t> unisecant_dim;
};

inline RuledReport sigma_invariants(std::int64_t g, std::int64_t r, std::int64_t d,
                                    Check check = Check::require) {
    const std::int64_t R = embedding_dim_R(g, r, d, check);
    RuledReport out;
    out.g = g;
    out.r = r;
    out.d = d;
    out.h0_restricted = (r + 3) * (g - 1);
    if (out.h0_restricted != (R + 1) - (2 * r + g - d + 1)) {
        throw SelfCheckError("h0(F|C) closed form disagrees with h0(F) - h0(E)");
    }
    out.degree_sigma = 2 * (r + 2) * (g - 1);
    if (r != 1) return out;

    out.n = 6 * g - 6;
    out.h = 4 * g - 5;
    if (*out.n != out.degree_sigma || *out.h != out.h0_restricted - 1) {
        throw SelfCheckError("ruled-surface constants disagree with F|C");
    }
    out.hilb_dim_ruled = hilb_dim_ruled(*out.n, g);
    if (d >= gonality(g) && d <= g) {
        const KdBound kd = kd_dim_bound(g, d);
        out.kd_bound = kd.bound;
        out.kd_strict = kd.strict;
        out.unisecant_dim = unisecant_family_dim(g, d);
    }
    return out;
}

struct ScrollReport {
    std::int64_t g = 0, r = 0, d = 0;
    std::int64_t R = 0;
    std::int64_t delta_symbolic = 0;
    std::int64_t delta_printed = 0;
    std::int64_t h0_F = 0;
    std::int64_t rho = 0;
    std::int64_t dim_Mv = 0;
    std::int64_t h1_TP = 0;
    std::int64_t h0_N = 0;
    std::int64_t hilb_dim = 0;
};

inline ScrollReport scroll_report(std::int64_t g, std::int64_t r, std::int64_t d,
                                  Check check = Check::require) {
    ScrollReport out;
    out.g = g;
    out.r = r;
    out.d = d;
    out.R = embedding_dim_R(g, r, d, check);
    const ScrollDegree deg = scroll_degree(g, r, d, check);
    out.delta_symbolic = deg.symbolic;
    out.delta_printed = deg.printed;
    out.h0_F = out.R + 1;
    out.rho = rho(g, r, d);
    out.dim_Mv = dim_moduli(g, r, d, check);
    out.h1_TP = tangent_cohomology(g, r, d, check).h1;
    out.h0_N = h0_normal_bundle(g, r, d, check);
    out.hilb_dim = hilb_dim_scroll(g, r, d, check);
    return out;
}

enum class Verdict { yes, no, unstated };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unstated: return "unstated";
    }
    return "unstated";
}

struct MukaiClass {
    std::int64_t g;
    Verdict dominant;
    Verdict gen_finite;
    std::string note;
};

/// Behaviour of c_g : KC_g -> M_g, (S, C) -> [C].
inline MukaiClass mukai_classification(std::int64_t g) {
    const K3Context ctx(g);
    MukaiClass out{g, Verdict::no, Verdict::unstated, {}};
    if (g <= 9 || g == 11) {
        out.dominant = Verdict::yes;
        out.note = "dominant";
    } else if (g == 10) {
        out.note = "image is a hypersurface";
    } else if (ctx.dim_pairs_space() < ctx.dim_mg()) {
        out.note = "dim KC_g = " + std::to_string(ctx.dim_pairs_space()) + " < dim M_g = " +
                   std::to_string(ctx.dim_mg());
    } else {
        throw SelfCheckError("g = " + std::to_string(g) + " has no dominance verdict");
    }
    if (g == 11 || g >= 13) out.gen_finite = Verdict::yes;
    if (g == 12) out.gen_finite = Verdict::no;
    return out;
}

}  // namespace k3scroll

#pragma once

// Chern calculus for torsion-free sheaves on the K3: Riemann-Roch, twists by
// the polarization, Mukai vectors and the expected dimension of their moduli.

#include "k3scroll/chow.hpp"
#include "k3scroll/proj_bundle.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3scroll {

struct SheafData {
    std::int64_t rank = 1;
    std::int64_t c1_mult = 0;  // c1 = c1_mult * L
    std::int64_t c2_pts = 0;   // c2 = c2_pts * pt
    std::optional<std::int64_t> h0;
    std::optional<std::int64_t> h1;
    std::optional<std::int64_t> h2;

    /// Chern data only; cohomology left unknown.
    static SheafData chern(std::int64_t rank, std::int64_t c1_mult, std::int64_t c2_pts) {
        SheafData s;
        s.rank = rank;
        s.c1_mult = c1_mult;
        s.c2_pts = c2_pts;
        return s;
    }

    bool has_cohomology() const { return h0 && h1 && h2; }

    friend bool operator==(const SheafData&, const SheafData&) = default;
};

/// The triple (rank, c1, c1^2/2 - c2 + rank) = ch(F)(1 + omega).
struct MukaiVector {
    std::int64_t r0;
    std::int64_t c1_mult;
    Rational s;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// c1(F)^2 as a number, for c1 a multiple of L.
inline std::int64_t c1_squared(const K3Context& ctx, const SheafData& s) {
    return s.c1_mult * s.c1_mult * ctx.l_squared();
}

/// chi(F) = ch_2(F) + 2 rk(F) on a K3 surface.
inline Rational riemann_roch_k3(const K3Context& ctx, const SheafData& s) {
    return Rational(2 * s.rank + s.c1_mult * s.c1_mult * (ctx.g() - 1) - s.c2_pts);
}

/// Attach cohomology numbers, rejecting values inconsistent with Riemann-Roch.
inline SheafData with_cohomology(const K3Context& ctx, SheafData s, std::int64_t h0,
                                 std::int64_t h1, std::int64_t h2) {
    if (h0 < 0 || h1 < 0 || h2 < 0) throw std::invalid_argument("negative cohomology dimension");
    const Rational chi = riemann_roch_k3(ctx, s);
    if (Rational(h0 - h1 + h2) != chi) {
        throw std::invalid_argument("h0 - h1 + h2 = " + std::to_string(h0 - h1 + h2) +
                                    " disagrees with Riemann-Roch chi = " + to_string(chi));
    }
    s.h0 = h0;
    s.h1 = h1;
    s.h2 = h2;
    return s;
}

/// F tensor L^n. Cohomology is cleared; callers that know it reattach it.
inline SheafData twist_by_L(const K3Context& ctx, const SheafData& s, std::int64_t n) {
    const std::int64_t l2 = ctx.l_squared();
    const std::int64_t pairs = s.rank * (s.rank - 1) / 2;
    SheafData out;
    out.rank = s.rank;
    out.c1_mult = s.c1_mult + n * s.rank;
    out.c2_pts = s.c2_pts + (s.rank - 1) * n * s.c1_mult * l2 + pairs * n * n * l2;
    return out;
}

inline MukaiVector mukai_vector(const K3Context& ctx, const SheafData& s) {
    return {s.rank, s.c1_mult,
            Rational(s.c1_mult * s.c1_mult * (ctx.g() - 1) - s.c2_pts + s.rank)};
}

/// 2 r c2 - (r-1) c1^2 - 2 (r^2 - 1), without the min{-1, .} clamp.
inline std::int64_t expected_dim_raw(const K3Context& ctx, const SheafData& s) {
    return 2 * s.rank * s.c2_pts - (s.rank - 1) * c1_squared(ctx, s) - 2 * (s.rank * s.rank - 1);
}

/// The clamped form min{-1, raw}, kept only so the audit can compare it.
inline std::int64_t expected_dim_clamped(const K3Context& ctx, const SheafData& s) {
    return std::min<std::int64_t>(-1, expected_dim_raw(ctx, s));
}

/// Chern data of a locally free sheaf viewed as a projective-bundle input.
inline BundleChern bundle_chern(const SheafData& s) {
    return BundleChern(s.rank, s.c1_mult, Rational(s.c2_pts));
}

}  // namespace k3scroll

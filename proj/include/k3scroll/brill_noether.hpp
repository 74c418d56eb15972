#pragma once

// Brill-Noether numbers, general gonality and numeric admissibility of (g, r, d)
// triples, together with the Lazarsfeld-Mukai bundle they determine.
//
// "Admissible" means numerically admissible: rho(g, r, d) >= 0 and
// h^1(A) = g - d + r >= 1. For r >= 2 this is necessary but not known to be
// sufficient for a globally generated g^r_d with globally generated residual.

#include "k3scroll/chow.hpp"
#include "k3scroll/sheaf.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3scroll {

inline std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d) {
    return g - (r + 1) * (g - d + r);
}

inline std::int64_t gonality(std::int64_t g) {
    if (g < K3Context::kMinGenus) {
        throw std::invalid_argument("gonality needs g >= 3, got " + std::to_string(g));
    }
    return g % 2 == 0 ? (g + 2) / 2 : (g + 3) / 2;
}

struct Admissibility {
    bool admissible = true;
    std::vector<std::string> reasons;  // empty iff admissible

    explicit operator bool() const { return admissible; }

    std::string summary() const {
        if (admissible) return "admissible";
        std::string out = "numerically inadmissible: ";
        for (std::size_t i = 0; i < reasons.size(); ++i) {
            if (i) out += "; ";
            out += reasons[i];
        }
        return out;
    }
};

inline Admissibility admissible(std::int64_t g, std::int64_t r, std::int64_t d) {
    Admissibility out;
    auto reject = [&](std::string why) {
        out.admissible = false;
        out.reasons.push_back(std::move(why));
    };
    if (g < K3Context::kMinGenus) reject("g = " + std::to_string(g) + " is below 3");
    if (r < 1) reject("r = " + std::to_string(r) + " is below 1");
    if (d < 1) reject("d = " + std::to_string(d) + " is below 1");
    if (const auto p = rho(g, r, d); p < 0) reject("rho = " + std::to_string(p));
    if (g - d + r < 1) {
        reject("d exceeds g+r-1 (" + std::to_string(d) + " > " + std::to_string(g + r - 1) + ")");
    }
    return out;
}

class InadmissibleError : public std::domain_error {
public:
    explicit InadmissibleError(Admissibility why)
        : std::domain_error(why.summary()), why_(std::move(why)) {}
    const Admissibility& admissibility() const { return why_; }

private:
    Admissibility why_;
};

/// Whether an operation insists on numeric admissibility.
enum class Check { require, force };

inline void require_admissible(std::int64_t g, std::int64_t r, std::int64_t d,
                               Check check = Check::require) {
    if (check == Check::force) return;
    if (auto a = admissible(g, r, d); !a) throw InadmissibleError(std::move(a));
}

struct BNTriple {
    std::int64_t g;
    std::int64_t r;
    std::int64_t d;
    std::int64_t rho;
    std::int64_t h1_of_A;

    static BNTriple of(std::int64_t g, std::int64_t r, std::int64_t d) {
        return {g, r, d, k3scroll::rho(g, r, d), g - d + r};
    }

    friend bool operator==(const BNTriple&, const BNTriple&) = default;
};

/// All admissible (r, d) with 1 <= r <= r_max, ordered by (r, d).
inline std::vector<BNTriple> enumerate_admissible(std::int64_t g, std::int64_t r_max) {
    if (g < K3Context::kMinGenus) throw std::invalid_argument("enumeration needs g >= 3");
    if (r_max < 1) throw std::invalid_argument("enumeration needs r_max >= 1");
    std::vector<BNTriple> out;
    for (std::int64_t r = 1; r <= r_max; ++r) {
        // h^1(A) >= 1 bounds d above by g + r - 1.
        for (std::int64_t d = 1; d <= g + r - 1; ++d) {
            if (admissible(g, r, d)) out.push_back(BNTriple::of(g, r, d));
        }
    }
    return out;
}

/// The Lazarsfeld-Mukai bundle E of a g^r_d on a curve in |L|:
/// rank r+1, c1 = L, c2 = d, h0 = 2r + g - d + 1, h1 = h2 = 0.
inline SheafData lm_bundle(std::int64_t g, std::int64_t r, std::int64_t d,
                           Check check = Check::require) {
    require_admissible(g, r, d, check);
    const K3Context ctx(g);
    SheafData e = SheafData::chern(r + 1, 1, d);
    const std::int64_t h0 = 2 * r + g - d + 1;
    // Forced evaluation outside the admissible range can make h0 negative.
    if (h0 < 0) return e;
    return with_cohomology(ctx, e, h0, 0, 0);
}

/// F = E tensor L with h0 = 3g - 3 - d + (r+1)(g+1), h1 = h2 = 0.
inline SheafData twisted_lm_bundle(std::int64_t g, std::int64_t r, std::int64_t d,
                                   Check check = Check::require) {
    require_admissible(g, r, d, check);
    const K3Context ctx(g);
    SheafData e = SheafData::chern(r + 1, 1, d);
    const SheafData f = twist_by_L(ctx, e, 1);
    const std::int64_t h0 = 3 * g - 3 - d + (r + 1) * (g + 1);
    if (h0 < 0) return f;
    return with_cohomology(ctx, f, h0, 0, 0);
}

/// Dimension of the moduli space M_v(S) of sheaves with v = v(F), namely 2 rho.
inline std::int64_t dim_moduli(std::int64_t g, std::int64_t r, std::int64_t d,
                               Check check = Check::require) {
    require_admissible(g, r, d, check);
    return 2 * rho(g, r, d);
}

}  // namespace k3scroll

#pragma once

// Chow ring of the projective bundle P(F) -> S for a vector bundle F of rank n
// on the K3 surface: A(P(F)) = A(S)[xi] / (xi^n - c1 xi^(n-1) + c2 xi^(n-2)),
// with c_k(F) = 0 for k >= 3 since the base is a surface.

#include "k3scroll/chow.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3scroll {

struct BundleChern {
    std::int64_t rank;
    std::int64_t c1_mult;  // c1 = c1_mult * L
    Rational c2_pts;       // c2 = c2_pts * pt

    BundleChern(std::int64_t rank_, std::int64_t c1, Rational c2)
        : rank(rank_), c1_mult(c1), c2_pts(std::move(c2)) {
        if (rank < 2) {
            throw std::invalid_argument("projective bundle needs rank >= 2, got " +
                                        std::to_string(rank));
        }
    }

    ChowS c1() const { return ChowS::polarization(c1_mult); }
    ChowS c2() const { return ChowS::point(c2_pts); }
};

/// Unreduced xi-polynomial: exponent -> coefficient in A(S).
using XiPolynomial = std::map<std::int64_t, ChowS>;

inline XiPolynomial xi_power(std::int64_t k, const ChowS& coeff = ChowS::one()) {
    if (k < 0) throw std::invalid_argument("negative xi exponent");
    return {{k, coeff}};
}

/// Reduced element: coeffs[k] multiplies xi^k, k = 0..rank-1.
class ChowP {
public:
    explicit ChowP(std::vector<ChowS> coeffs) : coeffs_(std::move(coeffs)) {}

    std::int64_t rank() const { return static_cast<std::int64_t>(coeffs_.size()); }
    const std::vector<ChowS>& coeffs() const { return coeffs_; }
    const ChowS& operator[](std::int64_t k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    XiPolynomial to_raw() const {
        XiPolynomial raw;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!coeffs_[k].is_zero()) raw[static_cast<std::int64_t>(k)] = coeffs_[k];
        }
        return raw;
    }

    friend bool operator==(const ChowP&, const ChowP&) = default;

private:
    std::vector<ChowS> coeffs_;
};

/// Rewrites xi^n -> c1 xi^(n-1) - c2 xi^(n-2), highest power first, until
/// every exponent is below the rank. Each step strictly lowers the top degree.
inline ChowP groth_reduce(const K3Context& ctx, const BundleChern& f, XiPolynomial poly) {
    const std::int64_t n = f.rank;
    const ChowS c1 = f.c1();
    const ChowS c2 = f.c2();
    while (!poly.empty() && poly.rbegin()->first >= n) {
        auto top = std::prev(poly.end());
        const std::int64_t k = top->first;
        const ChowS coeff = top->second;
        poly.erase(top);
        poly[k - 1] += chow_mul(ctx, c1, coeff);
        poly[k - 2] -= chow_mul(ctx, c2, coeff);
    }
    std::vector<ChowS> coeffs(static_cast<std::size_t>(n), ChowS{});
    for (const auto& [k, c] : poly) {
        if (k < 0) throw std::invalid_argument("negative xi exponent");
        coeffs[static_cast<std::size_t>(k)] += c;
    }
    return ChowP(std::move(coeffs));
}

inline ChowP chowp_mul(const K3Context& ctx, const BundleChern& f, const ChowP& x, const ChowP& y) {
    XiPolynomial prod;
    for (std::int64_t i = 0; i < x.rank(); ++i) {
        for (std::int64_t j = 0; j < y.rank(); ++j) {
            prod[i + j] += chow_mul(ctx, x[i], y[j]);
        }
    }
    return groth_reduce(ctx, f, std::move(prod));
}

/// Integral over P(F) of a reduced class: only xi^(n-1) times a point survives.
inline Rational integrate_p(const ChowP& x) { return integrate_s(x[x.rank() - 1]); }

/// Segre class s_j(F) for a surface base: s_0 = 1, s_1 = c1, s_2 = c1^2 - c2.
inline ChowS segre_class(const K3Context& ctx, const BundleChern& f, std::int64_t j) {
    switch (j) {
        case 0: return ChowS::one();
        case 1: return f.c1();
        case 2: return chow_mul(ctx, f.c1(), f.c1()) - f.c2();
        default: return ChowS{};
    }
}

/// pi_*(xi^k) = s_(k-n+1)(F).
inline ChowS pushforward(const K3Context& ctx, const BundleChern& f, std::int64_t k) {
    if (k < 0 || k > f.rank + 1) {
        throw std::out_of_range("xi^" + std::to_string(k) + " exceeds dim P(F) = " +
                                std::to_string(f.rank + 1));
    }
    return segre_class(ctx, f, k - f.rank + 1);
}

/// Degree of xi^(n+1) on P(F), computed by rewriting with the
/// Grothendieck relation.
inline Rational top_self_intersection(const K3Context& ctx, const BundleChern& f) {
    return integrate_p(groth_reduce(ctx, f, xi_power(f.rank + 1)));
}

}  // namespace k3scroll

#pragma once

// Graded Chow ring of a primitively polarized K3 surface (S, L) with
// Pic(S) = Z[L]. A class is a0 * 1 + a1 * L + a2 * pt, and the only
// nontrivial product of positive-degree generators is L * L = (2g-2) pt.

#include "k3scroll/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3scroll {

/// Numerical data of a general primitively polarized K3 surface of genus g.
class K3Context {
public:
    static constexpr std::int64_t kMinGenus = 3;
    static constexpr std::int64_t kChiStructureSheaf = 2;
    /// dim B_g, the moduli of polarized K3 surfaces of fixed genus.
    static constexpr std::int64_t kDimModuliK3 = 19;

    explicit K3Context(std::int64_t genus) : g_(genus) {
        if (genus < kMinGenus) {
            throw std::invalid_argument("genus must be >= 3, got " + std::to_string(genus));
        }
    }

    std::int64_t g() const { return g_; }
    std::int64_t l_squared() const { return 2 * g_ - 2; }
    std::int64_t chi_structure_sheaf() const { return kChiStructureSheaf; }
    std::int64_t dim_moduli_k3() const { return kDimModuliK3; }
    /// dim KC_g: pairs (S, C) with C a smooth curve in |L|.
    std::int64_t dim_pairs_space() const { return kDimModuliK3 + g_; }
    /// dim M_g.
    std::int64_t dim_mg() const { return 3 * g_ - 3; }

    friend bool operator==(const K3Context&, const K3Context&) = default;

private:
    std::int64_t g_;
};

/// Element of A(S) = A^0 + A^1 + A^2 with A^1 = Q L and A^2 = Q pt.
struct ChowS {
    Rational a0;
    Rational a1;
    Rational a2;

    static ChowS one() { return {1, 0, 0}; }
    static ChowS polarization(const Rational& mult = 1) { return {0, mult, 0}; }
    static ChowS point(const Rational& mult = 1) { return {0, 0, mult}; }

    bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0; }

    ChowS& operator+=(const ChowS& o) {
        a0 += o.a0;
        a1 += o.a1;
        a2 += o.a2;
        return *this;
    }
    ChowS& operator-=(const ChowS& o) {
        a0 -= o.a0;
        a1 -= o.a1;
        a2 -= o.a2;
        return *this;
    }
    friend ChowS operator+(ChowS x, const ChowS& y) { return x += y; }
    friend ChowS operator-(ChowS x, const ChowS& y) { return x -= y; }
    friend ChowS operator-(const ChowS& x) { return {-x.a0, -x.a1, -x.a2}; }
    friend ChowS operator*(const Rational& c, const ChowS& x) {
        return {c * x.a0, c * x.a1, c * x.a2};
    }
    friend bool operator==(const ChowS&, const ChowS&) = default;
};

inline ChowS chow_mul(const K3Context& ctx, const ChowS& x, const ChowS& y) {
    return {
        x.a0 * y.a0,
        x.a0 * y.a1 + x.a1 * y.a0,
        x.a0 * y.a2 + x.a2 * y.a0 + x.a1 * y.a1 * ctx.l_squared(),
    };
}

/// Degree of the 0-cycle part.
inline Rational integrate_s(const ChowS& x) { return x.a2; }

inline std::string to_string(const ChowS& x) {
    return to_string(x.a0) + " + " + to_string(x.a1) + "*L + " + to_string(x.a2) + "*pt";
}

}  // namespace k3scroll

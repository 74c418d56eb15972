#pragma once

// Small hand-rolled generators for the property tests.

#include "k3scroll/chow.hpp"
#include "k3scroll/rational.hpp"

#include <cstdint>
#include <random>

namespace k3scroll::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x4b33'5343'524f'4c4cULL);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rational random_rational() {
    return Rational(uniform(-40, 40)) / Rational(uniform(1, 12));
}

inline ChowS random_chow() { return {random_rational(), random_rational(), random_rational()}; }

inline ChowS random_degree_one() { return ChowS::polarization(random_rational()); }

}  // namespace k3scroll::testing

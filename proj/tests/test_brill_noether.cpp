#include "k3scroll/brill_noether.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace k3scroll;

TEST(Rho, Examples) {
    EXPECT_EQ(rho(8, 1, 5), 0);
    EXPECT_EQ(rho(3, 1, 3), 1);
    for (std::int64_t g = 3; g < 10; ++g) {
        for (std::int64_t d = 0; d < 12; ++d) EXPECT_EQ(rho(g, 0, d), d);
    }
}

TEST(Gonality, Examples) {
    EXPECT_EQ(gonality(8), 5);
    EXPECT_EQ(gonality(3), 3);
    EXPECT_EQ(gonality(11), 7);
    EXPECT_THROW(gonality(2), std::invalid_argument);
}

TEST(Admissible, Examples) {
    EXPECT_TRUE(admissible(8, 1, 5).admissible);

    const Admissibility too_big = admissible(8, 1, 33);
    EXPECT_FALSE(too_big.admissible);
    ASSERT_EQ(too_big.reasons.size(), 1U);
    EXPECT_EQ(too_big.reasons[0], "d exceeds g+r-1 (33 > 8)");

    const Admissibility negative = admissible(8, 1, 4);
    EXPECT_FALSE(negative.admissible);
    EXPECT_EQ(negative.summary(), "numerically inadmissible: rho = -2");
}

TEST(Admissible, RejectsDegenerateInputsWithReasons) {
    const Admissibility a = admissible(2, 0, 0);
    EXPECT_FALSE(a);
    EXPECT_GE(a.reasons.size(), 3U);
}

TEST(LmBundle, Examples) {
    const SheafData e = lm_bundle(8, 1, 5);
    EXPECT_EQ(e.rank, 2);
    EXPECT_EQ(e.c1_mult, 1);
    EXPECT_EQ(e.c2_pts, 5);
    EXPECT_EQ(e.h0, 6);
    EXPECT_EQ(e.h1, 0);
    EXPECT_EQ(e.h2, 0);
    EXPECT_EQ(lm_bundle(3, 1, 3).h0, 3);
    const SheafData e3 = lm_bundle(11, 2, 10);
    EXPECT_EQ(e3.rank, 3);
    EXPECT_EQ(e3.h0, 6);
    EXPECT_THROW(lm_bundle(8, 1, 33), InadmissibleError);
}

TEST(LmBundle, ForcedOutsideRangeDropsImpossibleCohomology) {
    const SheafData e = lm_bundle(8, 1, 33, Check::force);
    EXPECT_EQ(e.c2_pts, 33);
    EXPECT_FALSE(e.h0.has_value());
    EXPECT_EQ(lm_bundle(8, 1, 4, Check::force).h0, 7);
}

TEST(EnumerateAdmissible, Examples) {
    auto degrees = [](std::int64_t g) {
        std::vector<std::int64_t> out;
        for (const auto& t : enumerate_admissible(g, 1)) out.push_back(t.d);
        return out;
    };
    EXPECT_EQ(degrees(8), (std::vector<std::int64_t>{5, 6, 7, 8}));
    EXPECT_EQ(degrees(3), (std::vector<std::int64_t>{3}));
    EXPECT_EQ(degrees(4), (std::vector<std::int64_t>{3, 4}));
    EXPECT_THROW(enumerate_admissible(2, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_admissible(8, 0), std::invalid_argument);
}

TEST(EnumerateAdmissible, OrderedByRThenD) {
    const auto triples = enumerate_admissible(12, 4);
    EXPECT_TRUE(std::is_sorted(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
        return std::pair(a.r, a.d) < std::pair(b.r, b.d);
    }));
    for (const auto& t : triples) {
        EXPECT_EQ(t.rho, rho(t.g, t.r, t.d));
        EXPECT_GE(t.rho, 0);
        EXPECT_GE(t.h1_of_A, 1);
    }
}

TEST(BrillNoetherProperty, PencilWindowIsGonalityToGenus) {
    for (std::int64_t g = 3; g <= 100; ++g) {
        for (std::int64_t d = 1; d <= 2 * g; ++d) {
            EXPECT_EQ(admissible(g, 1, d).admissible, gonality(g) <= d && d <= g) << g << "," << d;
        }
        EXPECT_EQ(rho(g, 1, gonality(g)), g % 2 == 0 ? 0 : 1);
    }
}

TEST(BrillNoetherProperty, SectionsOfEMatchRiemannRoch) {
    for (std::int64_t g = 3; g <= 30; ++g) {
        for (const auto& t : enumerate_admissible(g, 5)) {
            const SheafData e = lm_bundle(g, t.r, t.d);
            EXPECT_EQ(*e.h0, 2 * (t.r + 1) + (g - 1) - t.d);
        }
    }
}

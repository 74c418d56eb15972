#include "k3scroll/audit.hpp"
#include "k3scroll/render.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace k3scroll;

namespace {
const ClaimRecord& find(const AuditReport& rep, std::string_view id, std::int64_t g, std::int64_t r,
                        std::int64_t d) {
    for (const auto& rec : rep.records) {
        if (rec.id == id && rec.g == g && rec.r == r && rec.d == d) return rec;
    }
    throw std::out_of_range("record not found");
}
}  // namespace

TEST(Registry, EveryClaimCarriesAQuote) {
    std::set<std::string_view> ids;
    for (const auto& c : kClaimRegistry) {
        EXPECT_FALSE(c.quote.empty()) << c.id;
        EXPECT_FALSE(c.location.empty()) << c.id;
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
    }
    EXPECT_THROW(claim_spec("NOPE"), std::out_of_range);
}

TEST(RunAudit, GenusEightPencils) {
    const AuditReport rep = run_audit(8, 8, 1);
    const ClaimRecord& deg = find(rep, "DEGREE", 8, 1, 5);
    EXPECT_EQ(deg.status, ClaimStatus::mismatch);
    EXPECT_EQ(deg.printed_value, 107);
    EXPECT_EQ(deg.derived_value, 93);
    EXPECT_EQ(*deg.delta, 14);
    for (const char* id : {"R-FORM", "HILB-DIM", "SIGMA", "EXPDIM"}) {
        const ClaimRecord& rec = find(rep, id, 8, 1, 5);
        EXPECT_EQ(rec.status, ClaimStatus::match) << id;
        EXPECT_EQ(*rec.delta, 0) << id;
    }
    EXPECT_TRUE(rep.self_check_ok());
}

TEST(RunAudit, KdStrictFailsAtGenusThree) {
    const AuditReport rep = run_audit(3, 3, 1);
    const ClaimRecord& kd = find(rep, "KD-STRICT", 3, 1, 3);
    EXPECT_EQ(kd.status, ClaimStatus::mismatch);
    EXPECT_EQ(kd.detail, "87 >= 78");
}

TEST(RunAudit, RejectsInvalidGrid) {
    EXPECT_THROW(run_audit(2, 5, 1), std::invalid_argument);
    EXPECT_THROW(run_audit(6, 5, 1), std::invalid_argument);
    EXPECT_THROW(run_audit(5, 5, 0), std::invalid_argument);
}

TEST(RunAudit, StatusMatchesDeltaAndSummaryAddsUp) {
    const AuditReport rep = run_audit(3, 12, 3);
    std::size_t total = 0;
    for (const auto& [status, count] : rep.summary()) total += count;
    EXPECT_EQ(total, rep.records.size());
    for (const auto& rec : rep.records) {
        ASSERT_TRUE(rec.delta.has_value());
        EXPECT_EQ(rec.status == ClaimStatus::match, *rec.delta == 0);
        EXPECT_FALSE(rec.quote.empty());
    }
}

TEST(RunAudit, StructuralFindings) {
    const AuditReport rep = run_audit(3, 20, 4);
    std::set<std::pair<std::int64_t, std::int64_t>> kd_failures;
    for (const auto& rec : rep.records) {
        if (rec.id == "DEGREE") {
            EXPECT_EQ(rec.status, ClaimStatus::mismatch);
            EXPECT_EQ(*rec.delta, 2 * rec.r * rec.r * (rec.g - 1));
        } else if (rec.id == "CORO-AMBIENT") {
            EXPECT_EQ(rec.r, 1);
            EXPECT_EQ(*rec.delta, 1);
        } else if (rec.id == "INTRO-SUM") {
            EXPECT_EQ(*rec.delta, rec.g);
        } else if (rec.id == "EXPDIM-CLAMP") {
            EXPECT_EQ(rec.status, ClaimStatus::mismatch);
        } else if (rec.id == "KD-STRICT") {
            EXPECT_EQ(rec.r, 1);
            if (rec.status == ClaimStatus::mismatch) kd_failures.insert({rec.g, rec.d});
        } else {
            EXPECT_EQ(rec.status, ClaimStatus::match) << rec.id;
        }
    }
    const std::set<std::pair<std::int64_t, std::int64_t>> expected{{3, 3}, {4, 3}, {4, 4}, {5, 5}};
    EXPECT_EQ(kd_failures, expected);
    EXPECT_TRUE(rep.self_check_ok());
}

TEST(RunAudit, Deterministic) {
    EXPECT_EQ(audit_json(run_audit(3, 10, 3)).dump(), audit_json(run_audit(3, 10, 3)).dump());
}

TEST(RunAudit, RecordOrder) {
    const AuditReport rep = run_audit(5, 6, 2);
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> keys;
    for (const auto& rec : rep.records) keys.emplace_back(rec.g, rec.r, rec.d);
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_EQ(rep.records.front().id, "DEGREE");
}

TEST(SelfCheck, FlagsBrokenAlwaysMatchClaim) {
    AuditReport rep = run_audit(8, 8, 1);
    ASSERT_TRUE(rep.self_check_ok());
    for (auto& rec : rep.records) {
        if (rec.id == "SIGMA") {
            rec.derived_value += 1;
            settle(rec);
            break;
        }
    }
    EXPECT_FALSE(rep.self_check_ok());
}

TEST(EvaluateClaim, NotDerivableOutsideAdmissibleRange) {
    const ClaimRecord rec = evaluate_claim("DEGREE", 8, 1, 33);
    EXPECT_EQ(rec.status, ClaimStatus::not_derivable);
    EXPECT_FALSE(rec.delta.has_value());
    EXPECT_NE(rec.detail.find("d exceeds g+r-1"), std::string::npos);
}

TEST(OttavianiCheck, SmoothScrollInP5) {
    const ClaimRecord rec = ottaviani_check();
    EXPECT_EQ(rec.d, 33);
    EXPECT_EQ(rec.status, ClaimStatus::match);
    EXPECT_NE(rec.detail.find("d exceeds g+r-1 (33 > 8)"), std::string::npos);
}

TEST(OttavianiCheck, Variants) {
    const ClaimRecord r33 = ottaviani_check(8, 33);
    EXPECT_EQ(r33.d, 5);
    EXPECT_EQ(r33.derived_value, 1);
    const ClaimRecord r30 = ottaviani_check(8, 30);
    EXPECT_EQ(r30.d, 8);
    EXPECT_EQ(r30.derived_value, 1);
    EXPECT_TRUE(admissible(8, 1, r30.d));
}

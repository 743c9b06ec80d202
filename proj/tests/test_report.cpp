#include <gtest/gtest.h>

#include "commalg/report.hpp"
#include "commalg/s2_trace.hpp"

using namespace commalg;

TEST(Report, CheckNeedsAnExpectedValue) {
  VerificationReport r("subject");
  EXPECT_EQ(r.check("a", "", 2, 2).status, ClaimStatus::Pass);
  EXPECT_EQ(r.check("b", "", 2, 3).status, ClaimStatus::Fail);
  EXPECT_EQ(r.check("c", "", nullptr, 3).status, ClaimStatus::Fail);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.count(ClaimStatus::Fail), 2u);
}

TEST(Report, BoundedAndInfo) {
  VerificationReport r("subject");
  EXPECT_EQ(r.bounded("a", "", true, true, 5).status, ClaimStatus::VerifiedToBound);
  EXPECT_EQ(r.bounded("b", "", nullptr, true, 5).status, ClaimStatus::Info);
  EXPECT_EQ(r.info("c", "", 7).status, ClaimStatus::Info);
  EXPECT_TRUE(r.ok());
}

TEST(Report, ImplicationFollowsHypotheses) {
  VerificationReport r("subject");
  EXPECT_EQ(r.implication("a", "", true, "").status, ClaimStatus::Implied);
  EXPECT_EQ(r.implication("b", "", false, "").status, ClaimStatus::NotImplied);
  EXPECT_TRUE(r.ok());
}

TEST(Report, VerdictFailIsAFailure) {
  VerificationReport r("subject");
  EXPECT_EQ(r.verdict("a", "", Verdict::Pass, std::nullopt).status, ClaimStatus::Pass);
  EXPECT_EQ(r.verdict("b", "", Verdict::Fail, std::nullopt).status, ClaimStatus::Fail);
}

TEST(Report, ExpectedValuesOverrideAndReevaluate) {
  VerificationReport r("subject");
  r.info("x", "old", 4);
  r.implication("h", "", true, "");
  const auto unmatched = r.apply_expected({{"x", {5, std::string("x = 5")}}, {"h", {false, {}}}, {"y", {1, {}}}});
  EXPECT_EQ(unmatched, std::vector<std::string>{"y"});
  EXPECT_EQ(r.find("x")->status, ClaimStatus::Fail);
  EXPECT_EQ(r.find("x")->anchor, "x = 5");
  EXPECT_EQ(r.find("h")->status, ClaimStatus::Fail);
}

TEST(Report, JsonShape) {
  VerificationReport r("subject");
  r.check("a", "anchor", 1, 1);
  r.bounded("b", "", true, true, 3).note = "why";
  r.set_meta("seed", 0);
  const nlohmann::json j = r.to_json();
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["ok"], true);
  ASSERT_EQ(j["claims"].size(), 2u);
  EXPECT_EQ(j["claims"][0]["status"], "pass");
  EXPECT_EQ(j["claims"][1]["bound"], 3);
  EXPECT_EQ(j["claims"][1]["note"], "why");
  EXPECT_EQ(j["meta"]["seed"], 0);
  EXPECT_NE(r.to_table().find("OK"), std::string::npos);
}

TEST(Report, AppendPrefixesIds) {
  VerificationReport a("a");
  VerificationReport b("b");
  b.check("x", "", 1, 1);
  a.append(b, "sub.");
  ASSERT_NE(a.find("sub.x"), nullptr);
}

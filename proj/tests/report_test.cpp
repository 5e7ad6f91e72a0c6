#include <gtest/gtest.h>

#include <cmath>

#include "psicert/report.hpp"

namespace {

using namespace psicert;

std::vector<CheckResult> sample_results() {
  SampleConfig c;
  c.n_samples = 500;
  std::vector<CheckResult> out;
  for (const char* id : {"lem21-1", "lem21-3", "cor-r5-ineq2", "cor-grunbaum-ball-real"}) {
    out.push_back(run_case(id, c));
  }
  CheckResult empty;
  empty.id = "empty";
  out.push_back(empty);
  return out;
}

TEST(Summary, CountsMatchStatuses) {
  const auto results = sample_results();
  const Summary s = summarize(results);
  EXPECT_EQ(s.pass + s.fail + s.empirical_pass + s.empirical_fail + s.undetermined, results.size());
  EXPECT_EQ(s.pass, 1u);
  EXPECT_EQ(s.fail, 1u);
  EXPECT_EQ(s.undetermined, 1u);
}

TEST(Report, RoundTripPreservesEverything) {
  SampleConfig c;
  c.n_samples = 500;
  const Report r = make_report(c, sample_results());
  const std::string text = serialize(r);
  const Report back = report_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(back.summary, r.summary);
  EXPECT_EQ(summarize(back.cases), r.summary);
  ASSERT_EQ(back.cases.size(), r.cases.size());
  for (std::size_t i = 0; i < r.cases.size(); ++i) EXPECT_EQ(back.cases[i], r.cases[i]) << r.cases[i].id;
  EXPECT_EQ(serialize(back), text);
}

TEST(Report, NonFiniteBecomesNull) {
  CheckResult empty;
  empty.id = "empty";
  const auto j = to_json(empty);
  EXPECT_TRUE(j.at("min_margin").is_null());
}

TEST(Report, ShortestRoundTripNumbers) {
  CheckResult r;
  r.id = "x";
  r.min_margin = 0.1;
  EXPECT_NE(to_json(r).dump().find("\"min_margin\":0.1"), std::string::npos);
}

TEST(Report, SchemaFields) {
  SampleConfig c;
  c.n_samples = 10;
  const auto j = to_json(make_report(c, {}));
  for (const char* key : {"version", "catalog_version", "config", "cases", "summary"}) EXPECT_TRUE(j.contains(key));
  for (const char* key : {"seed", "samples", "strategy"}) EXPECT_TRUE(j.at("config").contains(key));
  EXPECT_FALSE(j.at("config").contains("threads"));
}

TEST(ConstantsTable, RowsWithinPublishedTolerance) {
  const auto rows = constants_table();
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& row : rows) EXPECT_FALSE(row.erratum()) << row.name;
  const std::string text = format_constants(rows);
  EXPECT_NE(text.find("1.4616"), std::string::npos);
  EXPECT_EQ(text.find("ERRATUM"), std::string::npos);
}

TEST(ConstantsTable, FlagsDigitsOutsideTolerance) {
  ConstantRow row{"z", "", 1.0, 1.1, "1.1", 1e-3};
  EXPECT_TRUE(row.erratum());
  EXPECT_NE(format_constants({row}).find("ERRATUM"), std::string::npos);
}

}  // namespace

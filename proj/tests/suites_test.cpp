#include <gtest/gtest.h>

#include "ideallab/errors.hpp"
#include "ideallab/suites.hpp"

namespace ideallab {
namespace {

SuiteOptions small(int cases, std::uint64_t seed = 3) {
  SuiteOptions o;
  o.cases = cases;
  o.seed = seed;
  o.maxVertices = 6;
  return o;
}

TEST(Suites, NamesAndDefaults) {
  const auto& names = suiteNames();
  EXPECT_EQ(names.size(), 18u);
  EXPECT_EQ(defaultCases("dhs-reg"), 200);
  EXPECT_EQ(defaultCases("leaf-powers"), 50);
  EXPECT_EQ(defaultCases("add-variable"), 30);
  EXPECT_EQ(defaultCases("ass-chain"), 30);
  EXPECT_THROW(runSuite("no-such-suite", small(1)), InvalidArgument);
}

TEST(Suites, EverySuitePassesOnASmallCorpus) {
  for (const std::string& name : suiteNames()) {
    if (name == "polarization") continue;  // covered below with fewer cases
    SuiteReport r = runSuite(name, small(8));
    EXPECT_TRUE(r.passed()) << name << ": " << r.toJson().dump();
    EXPECT_GT(r.checks, 0) << name;
    EXPECT_EQ(r.suite, name);
    EXPECT_FALSE(r.statement.empty());
  }
  EXPECT_TRUE(runSuite("polarization", small(3)).passed());
}

TEST(Suites, ReportIsDeterministic) {
  for (const char* name : {"precise", "froberg", "leaf-powers"}) {
    std::string a = runSuite(name, small(5, 9)).toJson().dump();
    std::string b = runSuite(name, small(5, 9)).toJson().dump();
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Suites, ReportRecordsParametersAndStatement) {
  Json j = runSuite("dhs-depth", small(4, 11)).toJson();
  EXPECT_EQ(j["suite"], "dhs-depth");
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["field"], "q");
  EXPECT_TRUE(j.contains("statement"));
  EXPECT_TRUE(j["parameters"].is_object());
  EXPECT_FALSE(j["parameters"].empty());
  EXPECT_EQ(j["failures"], 0);
}

TEST(Suites, FailingReportKeepsCounterexample) {
  SuiteReport r;
  r.suite = "demo";
  r.failures = 1;
  r.counterexample = Json{{"ideal", "x*y"}};
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.toJson()["counterexample"]["ideal"], "x*y");
}

TEST(Suites, PrimeFieldRuns) {
  SuiteOptions o = small(6);
  o.field = FieldSpec::prime(2);
  SuiteReport r = runSuite("engines-agree", o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.toJson()["field"], "f2");
}

}  // namespace
}  // namespace ideallab

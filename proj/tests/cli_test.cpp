#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ideallab/cli.hpp"
#include "json.hpp"
#include "test_util.hpp"

namespace ideallab {
namespace {

using nlohmann::json;
using testing::fixture;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json runJson(std::vector<std::string> args) {
  args.push_back("--json");
  Outcome o = run(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return json::parse(o.out);
}

std::string tempFile(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, InvariantsBothEnginesOnNineVariableFixture) {
  json j = runJson({"invariants", fixture("ex43.ideal"), "--engine", "both"});
  EXPECT_TRUE(j["enginesAgree"].get<bool>());
  ASSERT_EQ(j["results"].size(), 2u);
  for (const auto& r : j["results"]) EXPECT_EQ(r["reg"], 2);
  EXPECT_TRUE(j["results"][0].contains("witnesses"));
  EXPECT_TRUE(j["results"][1].contains("traces"));
}

TEST(Cli, InvariantsTextOutput) {
  Outcome o = run({"invariants", fixture("xy.ideal")});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("reg"), std::string::npos);
  EXPECT_NE(o.out.find("depth"), std::string::npos);
}

TEST(Cli, ComplexOfPrincipalIdeal) {
  json j = runJson({"complex", fixture("xy.ideal"), "--a", "0,0"});
  EXPECT_EQ(j["facets"], json::parse(R"(["{x}", "{y}"])"));
  EXPECT_EQ(j["reducedHomology"][1]["dimension"], 0);
  EXPECT_EQ(j["reducedHomology"][1]["rank"], 1);
}

TEST(Cli, IdealOperations) {
  json c = runJson({"colon", fixture("ex43.ideal"), "x8"});
  EXPECT_EQ(c["result"]["generators"], json::parse(R"(["x4", "x9", "x2*x3", "x3*x5", "x2*x5*x7"])"));
  json s = runJson({"sum", fixture("xy.ideal"), "x"});
  EXPECT_EQ(s["result"]["generators"], json::parse(R"(["x"])"));
  json p = runJson({"power", fixture("xy.ideal"), "3"});
  EXPECT_EQ(p["result"]["generators"], json::parse(R"(["x^3*y^3"])"));
  json cl = runJson({"closure", fixture("xy.ideal")});
  EXPECT_EQ(cl["result"]["generators"], json::parse(R"(["x*y"])"));
  json a = runJson({"ass", fixture("xy.ideal")});
  EXPECT_EQ(a["associatedPrimes"].size(), 2u);
  EXPECT_EQ(a["height"], 1);
}

TEST(Cli, Powers) {
  json j = runJson({"powers", fixture("xy.ideal"), "--max-t", "3"});
  ASSERT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["rows"][2]["reg"], 5);
  EXPECT_TRUE(j["monotone"].get<bool>());
}

TEST(Cli, GraphChecks) {
  EXPECT_FALSE(runJson({"graph", fixture("c4.hg"), "--check", "chordal"})["chordal"].get<bool>());
  EXPECT_EQ(runJson({"graph", fixture("c4.hg"), "--check", "cover"})["classification"], "VERY_WELL_COVERED");
  EXPECT_EQ(runJson({"graph", fixture("p3.hg"), "--check", "cover"})["classification"], "NEITHER");
  EXPECT_FALSE(runJson({"graph", fixture("c4.hg"), "--check", "twins"})["twinFree"].get<bool>());
  EXPECT_TRUE(runJson({"graph", fixture("p4.hg"), "--check", "cm"})["cohenMacaulay"].get<bool>());
  EXPECT_TRUE(runJson({"graph", fixture("c4.hg"), "--check", "good-leaf"})["goodLeaf"].is_null());
  EXPECT_TRUE(runJson({"graph", fixture("triple.hg"), "--check", "reg3"})["hypothesis"].get<bool>());
  EXPECT_EQ(runJson({"graph", fixture("triple.hg"), "--check", "reg3"})["reg"], 2);
  json leaf = runJson({"graph", fixture("hyperpath.hg"), "--check", "good-leaf", "--max-t", "2"});
  EXPECT_EQ(leaf["goodLeaf"], "{a b c}");
  EXPECT_EQ(runJson({"graph", fixture("p4.hg"), "--check", "favaron"})["perfectMatchings"].size(), 1u);
  EXPECT_TRUE(runJson({"graph", fixture("p4.hg"), "--check", "claw"})["clawFree"].get<bool>());
  EXPECT_TRUE(runJson({"graph", fixture("p4.hg"), "--check", "gap"})["gapFree"].get<bool>());
}

TEST(Cli, VerifyIsByteIdentical) {
  std::vector<std::string> args{"verify", "dhs-reg", "--cases", "20", "--seed", "7", "--json"};
  Outcome a = run(args);
  Outcome b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["suite"], "dhs-reg");
  EXPECT_EQ(j["seed"], 7);
}

TEST(Cli, InvariantsIsByteIdentical) {
  std::vector<std::string> args{"invariants", fixture("ex410.ideal"), "--engine", "both", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, FieldOption) {
  json j = runJson({"invariants", fixture("xy.ideal"), "--field", "f3"});
  EXPECT_EQ(j["field"], "f3");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"invariants"}).code, 2);
  EXPECT_EQ(run({"invariants", "/nonexistent.ideal"}).code, 2);
  EXPECT_EQ(run({"invariants", fixture("xy.ideal"), "--engine", "magic"}).code, 2);
  EXPECT_EQ(run({"invariants", fixture("xy.ideal"), "--field", "f4"}).code, 2);
  EXPECT_EQ(run({"colon", fixture("xy.ideal"), "w"}).code, 2);
  EXPECT_EQ(run({"power", fixture("xy.ideal"), "0"}).code, 2);
  EXPECT_EQ(run({"graph", fixture("c4.hg"), "--check", "everything"}).code, 2);
  EXPECT_EQ(run({"graph", fixture("c4.hg"), "--check", "good-leaf", "--max-t", "2"}).code, 2);
  EXPECT_EQ(run({"complex", fixture("xy.ideal"), "--a", "0,zero"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  std::string bad = tempFile("bad.ideal", "vars x y\nx*q\n");
  Outcome o = run({"invariants", bad});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("line 2"), std::string::npos);
  std::string unit = tempFile("unit.ideal", "vars x y\n1\n");
  EXPECT_EQ(run({"invariants", unit}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("verify"), std::string::npos);
}

TEST(Cli, CapsExitThree) {
  std::string vars = "vars";
  std::string gen;
  for (int k = 1; k <= 17; ++k) {
    vars += " x" + std::to_string(k);
    gen += (k > 1 ? "*x" : "x") + std::to_string(k);
  }
  std::string path = tempFile("wide.ideal", vars + "\n" + gen + "\n");
  Outcome o = run({"invariants", path});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.err.find("cap"), std::string::npos);
}

}  // namespace
}  // namespace ideallab

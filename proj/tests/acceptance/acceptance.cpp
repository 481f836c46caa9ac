// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ideallab/errors.hpp"
#include "ideallab/io.hpp"
#include "ideallab/recursion.hpp"
#include "ideallab/suites.hpp"
#include "ideallab/takayama.hpp"

namespace {

using namespace ideallab;

constexpr std::uint64_t kSeed = 7;

std::string fixture(const std::string& name) { return std::string(IDEALLAB_FIXTURES) + "/" + name; }

// Collects mismatches; an empty list means the criterion holds.
struct Findings {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  template <typename T>
  void expectEq(const T& got, const T& want, const std::string& what) {
    std::ostringstream s;
    s << what << " = " << got;
    if (!(got == want)) {
      s << ", expected " << want;
      problems.push_back(s.str());
    } else {
      notes.push_back(s.str());
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limitSeconds;
  std::function<void(Findings&)> body;
};

void suites(Findings& f, const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    SuiteOptions options;
    options.seed = kSeed;
    SuiteReport r = runSuite(name, options);
    std::ostringstream s;
    s << name << " " << r.checks << " checks";
    if (r.skipped) s << ", " << r.skipped << " skipped";
    if (r.passed()) {
      f.notes.push_back(s.str());
    } else {
      s << ", " << r.failures << " failures, counterexample " << r.counterexample->dump();
      f.problems.push_back(s.str());
    }
  }
}

MonomialIdeal load(const std::string& name) { return readIdealFile(fixture(name)).ideal; }

Monomial monomial(const std::string& file, const std::string& text) {
  return parseMonomial(text, readIdealFile(fixture(file)).vars);
}

std::vector<Criterion> criteria() {
  return {
      {1, "nine-variable squarefree ideal: reg R/I = reg R/(I:x8) = 2, both engines", 60,
       [](Findings& f) {
         MonomialIdeal i = load("ex43.ideal");
         MonomialIdeal q = colon(i, monomial("ex43.ideal", "x8"));
         f.expectEq(regOracle(i).value, 2, "oracle reg R/I");
         f.expectEq(regRecursive(i).value, 2, "recursive reg R/I");
         f.expectEq(regOracle(q).value, 2, "oracle reg R/(I:x8)");
         f.expectEq(regRecursive(q).value, 2, "recursive reg R/(I:x8)");
       }},
      {2, "five-generator ideal: reg R/I = 6, reg R/(I,x^3y) = 7, reg R/(I:x^3y) = 4", 120,
       [](Findings& f) {
         MonomialIdeal i = load("ex410.ideal");
         Monomial m = monomial("ex410.ideal", "x^3*y");
         f.expectEq(regOracle(i).value, 6, "reg R/I");
         f.expectEq(regOracle(sumWithMonomial(i, m)).value, 7, "reg R/(I,f)");
         f.expectEq(regOracle(colon(i, m)).value, 4, "reg R/(I:f)");
       }},
      {3, "depth R/(x^3y, y^2z^5, z^2u^4v) = 2, both engines", 60,
       [](Findings& f) {
         MonomialIdeal i = load("ex411.ideal");
         f.expectEq(depthOracle(i).value, 2, "oracle depth");
         f.expectEq(depthRecursive(i).value, 2, "recursive depth");
       }},
      {4, "suites dhs-depth, dhs-reg (200 random ideals)", 600,
       [](Findings& f) { suites(f, {"dhs-depth", "dhs-reg"}); }},
      {5, "suites precise, bounds, inclusion, colon-monotone", 0,
       [](Findings& f) { suites(f, {"precise", "bounds", "inclusion", "colon-monotone"}); }},
      {6, "suites ht-bound, local-bound", 0, [](Findings& f) { suites(f, {"ht-bound", "local-bound"}); }},
      {7, "suites engines-agree, polarization, box-stability", 0,
       [](Findings& f) { suites(f, {"engines-agree", "polarization", "box-stability"}); }},
      {8, "suite leaf-powers (50 hypergraphs with a good leaf, T = 3)", 900,
       [](Findings& f) { suites(f, {"leaf-powers"}); }},
      {9, "suites add-variable, ass-chain (30 ideals, s <= 3)", 0,
       [](Findings& f) { suites(f, {"add-variable", "ass-chain"}); }},
      {10, "suite cm-vwc (all labeled graphs on <= 8 vertices)", 1800,
       [](Findings& f) {
         SuiteOptions options;
         options.seed = kSeed;
         SuiteReport r = runSuite("cm-vwc", options);
         f.expect(r.passed(), "cm-vwc failures: " + std::to_string(r.failures));
         f.expectEq(r.tallies.value("graphs8", 0L), 1L << 28, "graphs on 8 vertices");
         f.notes.push_back("very well-covered " + std::to_string(r.tallies.value("veryWellCovered8", 0L)) +
                           " on 8 vertices");
       }},
      {11, "suite froberg (all 1024 labeled graphs on 5 vertices)", 0,
       [](Findings& f) {
         SuiteOptions options;
         options.seed = kSeed;
         SuiteReport r = runSuite("froberg", options);
         f.expect(r.passed(), "froberg failures: " + std::to_string(r.failures));
         f.expectEq(r.tallies.value("graphs5", 0L), 1024L, "graphs on 5 vertices");
       }},
      {12, "suites reg3, claw-gap", 0, [](Findings& f) { suites(f, {"reg3", "claw-gap"}); }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : criteria()) {
    Findings f;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.problems.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limitSeconds > 0 && seconds > c.limitSeconds) {
      f.problems.push_back("took longer than " + std::to_string(static_cast<int>(c.limitSeconds)) + " s");
    }
    const bool ok = f.problems.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
              << std::fixed << std::setprecision(1) << seconds << " s)";
    const auto& detail = ok ? f.notes : f.problems;
    for (std::size_t k = 0; k < detail.size(); ++k) std::cout << (k == 0 ? "  [" : "; ") << detail[k];
    if (!detail.empty()) std::cout << "]";
    std::cout << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}

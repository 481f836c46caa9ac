#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ideallab/corpus.hpp"
#include "ideallab/hypergraph.hpp"
#include "ideallab/powers.hpp"
#include "ideallab/recursion.hpp"
#include "ideallab/takayama.hpp"

namespace ideallab {
namespace {

std::vector<MonomialIdeal> corpus(std::uint64_t seed, int count) {
  CorpusRng rng(seed);
  std::vector<MonomialIdeal> out;
  while (static_cast<int>(out.size()) < count) {
    MonomialIdeal i = randomIdeal(rng);
    if (!i.isUnit()) out.push_back(i);
  }
  return out;
}

template <typename F>
void forEachInBox(const std::vector<int>& upper, F&& f) {
  std::vector<int> e(upper.size(), 0);
  while (true) {
    f(Monomial(e));
    std::size_t j = 0;
    while (j < e.size() && e[j] == upper[j]) e[j++] = 0;
    if (j == e.size()) return;
    ++e[j];
  }
}

// Every associated prime is I : w for some w with w_j <= d_j.
std::vector<PrimeSupport> bruteAssociatedPrimes(const MonomialIdeal& i) {
  std::set<PrimeSupport> found;
  forEachInBox(i.maxExponents(), [&](const Monomial& w) {
    if (i.contains(w)) return;
    MonomialIdeal q = colon(i, w);
    if (q.isGeneratedByVariables()) found.insert(PrimeSupport{q.support()});
  });
  return {found.begin(), found.end()};
}

TEST(Properties, NormalizeIsIdempotent) {
  for (const MonomialIdeal& i : corpus(101, 100)) {
    EXPECT_EQ(MonomialIdeal::normalize(i.generators(), i.numVars()), i);
    for (const Monomial& a : i.generators()) {
      for (const Monomial& b : i.generators()) {
        if (!(a == b)) {
          EXPECT_FALSE(a.divides(b));
        }
      }
    }
  }
}

TEST(Properties, ColonComposesAndContains) {
  CorpusRng rng(102);
  for (const MonomialIdeal& i : corpus(103, 80)) {
    auto f = randomMonomialOutside(rng, i);
    auto g = randomMonomialOutside(rng, i);
    if (!f || !g) continue;
    EXPECT_EQ(colon(colon(i, *f), *g), colon(i, *f * *g));
    EXPECT_EQ(colon(i, Monomial::one(i.numVars())), i);
    EXPECT_TRUE(colon(i, *f).contains(i));
  }
}

TEST(Properties, PowersMultiply) {
  for (const MonomialIdeal& i : corpus(104, 40)) {
    EXPECT_EQ(power(i, 1), i);
    EXPECT_EQ(product(power(i, 2), power(i, 1)), power(i, 3));
  }
}

TEST(Properties, ClosureIsIdempotentAndExtensive) {
  for (const MonomialIdeal& i : corpus(105, 40)) {
    MonomialIdeal c = integralClosure(i);
    EXPECT_TRUE(c.contains(i));
    EXPECT_EQ(integralClosure(c), c);
    if (i.isSquarefree()) {
      EXPECT_EQ(c, i);
    }
  }
}

TEST(Properties, AssociatedPrimesMatchBoxOracle) {
  for (const MonomialIdeal& i : corpus(106, 80)) {
    auto ass = associatedPrimes(i);
    EXPECT_EQ(ass, bruteAssociatedPrimes(i)) << i.key();
    int best = static_cast<int>(i.numVars()) + 1;
    for (const PrimeSupport& p : minimalPrimes(i)) {
      EXPECT_TRUE(std::find(ass.begin(), ass.end(), p) != ass.end());
      best = std::min(best, cardinality(p.vars));
    }
    EXPECT_EQ(height(i), best);
  }
}

TEST(Properties, PolarizationShiftsDepthAndKeepsReg) {
  for (const MonomialIdeal& i : corpus(107, 25)) {
    PolarizedIdeal p = polarize(i);
    if (static_cast<int>(p.ideal.numVars()) > 14) continue;
    InvariantReport a = oracleInvariants(i);
    InvariantReport b = oracleInvariants(p.ideal);
    EXPECT_EQ(b.depth, a.depth + p.addedVarCount) << i.key();
    EXPECT_EQ(b.reg, a.reg) << i.key();
  }
}

TEST(Properties, DepthAndRegBounds) {
  for (const MonomialIdeal& i : corpus(108, 100)) {
    InvariantReport r = oracleInvariants(i);
    EXPECT_LE(r.depth, dimension(i));
    EXPECT_GE(r.reg, i.maxGeneratorDegree() - 1);
    EXPECT_LE(r.reg + 1, lcmDegree(i) - height(i) + 1);
  }
}

TEST(Properties, ColonDoesNotLowerDepthOrRaiseReg) {
  CorpusRng rng(109);
  for (const MonomialIdeal& i : corpus(110, 100)) {
    auto f = randomMonomialOutside(rng, i);
    if (!f) continue;
    InvariantReport a = oracleInvariants(i);
    InvariantReport b = oracleInvariants(colon(i, *f));
    EXPECT_LE(a.depth, b.depth) << i.key();
    EXPECT_GE(a.reg, b.reg) << i.key();
  }
}

TEST(Properties, SplittingBranchesBracketEveryNode) {
  for (const MonomialIdeal& i : corpus(111, 60)) {
    for (const TraceNode& n : depthRecursive(i).trace.nodes) {
      if (n.rule == RecursionRule::Base) continue;
      EXPECT_TRUE(n.value == n.colonValue || n.value == n.sumValue);
    }
    for (const TraceNode& n : regRecursive(i).trace.nodes) {
      if (n.rule == RecursionRule::Base) continue;
      EXPECT_TRUE(n.value == n.colonValue + 1 || n.value == n.sumValue);
      EXPECT_LE(std::max(n.colonValue, n.sumValue), n.value);
      EXPECT_LE(n.value, std::max(n.colonValue + 1, n.sumValue));
      const int sign = (n.colonValue > n.sumValue) - (n.colonValue < n.sumValue);
      RecursionRule expected = sign > 0 ? RecursionRule::RegColon
                               : sign < 0 ? RecursionRule::RegSum
                                          : RecursionRule::RegTieOracle;
      EXPECT_EQ(n.rule, expected);
    }
  }
}

TEST(Properties, AddedVariablePowersAreMonotone) {
  for (const MonomialIdeal& i : corpus(112, 8)) {
    auto rows = addedVariablePowers(i, 3);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      EXPECT_TRUE(rows[k].holds()) << i.key() << " s=" << rows[k].s;
      if (k == 0) continue;
      EXPECT_LE(rows[k].depthLhs, rows[k - 1].depthLhs);
      EXPECT_GE(rows[k].regLhs, rows[k - 1].regLhs);
    }
  }
}

TEST(Properties, GoodLeafPowersAreMonotone) {
  CorpusRng rng(113);
  int checked = 0;
  while (checked < 10) {
    Hypergraph h = randomAntichainHypergraph(rng, 5, 4);
    if (!goodLeaf(h)) continue;
    ++checked;
    EXPECT_TRUE(isMonotone(powersTable(edgeIdeal(h), 3, true)));
  }
}

TEST(Properties, FrobergOnSmallGraphs) {
  for (int n = 1; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask & (1 << bit)) edges.push_back({u, v});
      if (edges.empty()) continue;
      Graph g = Graph::fromEdges(n, edges);
      EXPECT_EQ(regOracle(edgeIdeal(g.hypergraph())).value <= 1, isChordal(g.complement()));
    }
  }
}

TEST(Properties, ClawFreeGapFreeGraphsHaveSmallReg) {
  CorpusRng rng(114);
  int checked = 0;
  while (checked < 30) {
    Graph g = Graph::fromAdjacency(randomAdjacency(rng, rng.uniform(2, 7)));
    if (g.edges().empty()) continue;
    PatternFlags f = patternChecks(g);
    if (!f.clawFree || !f.gapFree) continue;
    ++checked;
    EXPECT_LE(regOracle(edgeIdeal(g.hypergraph())).value, 2);
  }
}

TEST(Properties, VeryWellCoveredCohenMacaulayIffTwinFree) {
  CorpusRng rng(115);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 40; ++trial) {
    Graph g = Graph::fromAdjacency(randomAdjacency(rng, 2 * rng.uniform(1, 3)));
    auto ms = perfectMatchings(g);
    if (ms.empty() || coverClassification(g).kind != CoverClass::VeryWellCovered) continue;
    ++checked;
    const bool twinFree = patternChecks(g).twins.empty();
    EXPECT_EQ(isCohenMacaulay(g.hypergraph()), twinFree);
    bool someMatchingClean = std::any_of(ms.begin(), ms.end(), [&](const Matching& m) {
      return favaronChecks(g, m).noC4TwoMatchingEdges;
    });
    EXPECT_EQ(someMatchingClean, twinFree);
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace ideallab

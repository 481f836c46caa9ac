#include <gtest/gtest.h>

#include <algorithm>

#include "ideallab/corpus.hpp"
#include "ideallab/errors.hpp"
#include "ideallab/takayama.hpp"
#include "test_util.hpp"

namespace ideallab {
namespace {

using testing::ideal;

// Faces by the definition: F \ G_a for G_a ⊆ F such that no generator g has
// g_j <= a_j for every j outside F.
SimplicialComplex bruteDegreeComplex(const MonomialIdeal& i, const std::vector<int>& a) {
  const int n = static_cast<int>(i.numVars());
  VertexSet g = 0;
  for (int j = 0; j < n; ++j) {
    if (a[static_cast<std::size_t>(j)] < 0) g |= singleton(j);
  }
  std::vector<VertexSet> faces;
  for (VertexSet f = 0; f <= fullSet(n); ++f) {
    if (!isSubset(g, f)) continue;
    bool member = false;
    for (const Monomial& gen : i.generators()) {
      bool divides = true;
      for (int j = 0; j < n; ++j) {
        if (!(f & singleton(j)) && gen[static_cast<std::size_t>(j)] > a[static_cast<std::size_t>(j)]) divides = false;
      }
      member = member || divides;
    }
    if (!member) faces.push_back(f & ~g);
  }
  return SimplicialComplex::fromFacets(n, faces);
}

// Hochster: beta_{i,W}(R/I) = rank H̃_{|W|-i-1}(Δ_W) for the Stanley-Reisner
// complex Δ of a squarefree I. Returns {depth, reg} of R/I.
std::pair<int, int> hochster(const MonomialIdeal& i, FieldSpec field) {
  const int n = static_cast<int>(i.numVars());
  std::vector<VertexSet> faces;
  for (VertexSet f = 0; f <= fullSet(n); ++f) {
    bool face = true;
    for (const Monomial& gen : i.generators()) face = face && !isSubset(gen.support(), f);
    if (face) faces.push_back(f);
  }
  int pd = 0, reg = 0;
  for (VertexSet w = 0; w <= fullSet(n); ++w) {
    std::vector<VertexSet> restricted;
    for (VertexSet f : faces) {
      if (isSubset(f, w)) restricted.push_back(f);
    }
    auto ranks = reducedHomologyRanks(SimplicialComplex::fromFacets(n, restricted), field);
    for (int j = -1; j + 1 < static_cast<int>(ranks.size()); ++j) {
      if (ranks[static_cast<std::size_t>(j + 1)] == 0) continue;
      pd = std::max(pd, cardinality(w) - j - 1);
      reg = std::max(reg, j + 1);
    }
  }
  return {n - pd, reg};
}

TEST(DegreeComplex, PrincipalExamples) {
  MonomialIdeal xy = ideal("x y", {"x*y"});
  auto c = degreeComplex(xy, {{0, 0}});
  EXPECT_EQ(c.facets(), (std::vector<VertexSet>{1, 2}));
  EXPECT_TRUE(degreeComplex(xy, {{1, 1}}).isVoid());
  EXPECT_TRUE(degreeComplex(xy, {{-1, 0}}).isIrrelevant());
}

TEST(DegreeComplex, RejectsDegenerateIdeals) {
  EXPECT_THROW(degreeComplex(MonomialIdeal::zero(2), {{0, 0}}), InvalidArgument);
  EXPECT_THROW(degreeComplex(MonomialIdeal::unit(2), {{0, 0}}), InvalidArgument);
  EXPECT_THROW(degreeComplex(ideal("x y", {"x"}), {{0}}), InvalidArgument);
}

TEST(DegreeComplex, MatchesDefinitionOnRandomIdeals) {
  CorpusRng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal i = randomIdeal(rng, {2, 4, 1, 5, 3});
    if (i.isUnit()) continue;
    const auto n = i.numVars();
    std::vector<int> d = i.maxExponents();
    for (int k = 0; k < 20; ++k) {
      std::vector<int> a(n);
      for (std::size_t j = 0; j < n; ++j) a[j] = rng.uniform(-1, std::max(d[j], 1));
      EXPECT_EQ(degreeComplex(i, {a}), bruteDegreeComplex(i, a)) << i.key();
    }
  }
}

TEST(Oracle, Examples) {
  MonomialIdeal xy = ideal("x y", {"x*y"});
  OracleResult d = depthOracle(xy);
  EXPECT_EQ(d.value, 1);
  EXPECT_EQ(d.witness.value, 1);
  // (0,0) with i = 1 is also a witness: two points have H̃_0 of rank 1
  EXPECT_EQ(homologyRank(reducedHomologyRanks(degreeComplex(xy, {{0, 0}}), FieldSpec::rationals()), 0), 1);
  OracleResult r = regOracle(xy);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.witness.value, 1);

  EXPECT_EQ(depthOracle(ideal("x", {"x"})).value, 0);
  EXPECT_EQ(regOracle(ideal("x", {"x^2"})).value, 1);
  EXPECT_EQ(regOracle(ideal("x y", {"x^2", "y^3"})).value, 3);
  EXPECT_EQ(depthOracle(ideal("x y z u v", {"x^3*y", "y^2*z^5", "z^2*u^4*v"})).value, 2);
  EXPECT_EQ(regOracle(ideal("x y z u v", {"x*y^2", "y*z^2", "z*u^3", "u*v^2*x", "v^2*x*z"})).value, 6);
}

TEST(Oracle, InvariantReportCarriesWitnesses) {
  InvariantReport r = oracleInvariants(ideal("x y z", {"x*y", "y*z"}));
  EXPECT_EQ(r.engine, "oracle");
  EXPECT_EQ(r.depth, 1);
  EXPECT_EQ(r.reg, 1);
  ASSERT_TRUE(r.depthWitness && r.regWitness);
  EXPECT_EQ(r.depthWitness->value, r.depth);
  EXPECT_EQ(r.regWitness->value, r.reg);
}

TEST(Oracle, WitnessHasNonzeroHomology) {
  CorpusRng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = randomIdeal(rng);
    if (i.isUnit()) continue;
    for (const OracleResult& res : {depthOracle(i), regOracle(i)}) {
      auto c = degreeComplex(i, res.witness.a);
      auto ranks = reducedHomologyRanks(c, FieldSpec::rationals());
      EXPECT_GT(homologyRank(ranks, res.witness.i - 1), 0);
    }
  }
}

TEST(Oracle, CapsAreEnforced) {
  Limits tiny;
  tiny.maxVars = 2;
  EXPECT_THROW(depthOracle(ideal("x y z", {"x*y*z"}), FieldSpec::rationals(), tiny), CapExceeded);
  Limits smallBox;
  smallBox.maxBox = 4;
  EXPECT_THROW(regOracle(ideal("x y z", {"x^3*y^3*z^3"}), FieldSpec::rationals(), smallBox), CapExceeded);
  Limits lowExp;
  lowExp.maxExponent = 2;
  EXPECT_THROW(regOracle(ideal("x", {"x^3"}), FieldSpec::rationals(), lowExp), CapExceeded);
}

TEST(Oracle, MatchesHochsterOnSquarefreeIdeals) {
  CorpusRng rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    MonomialIdeal i = randomIdeal(rng, {2, 6, 1, 6, 1});
    if (i.isUnit()) continue;
    auto [depth, reg] = hochster(i, FieldSpec::rationals());
    InvariantReport r = oracleInvariants(i);
    EXPECT_EQ(r.depth, depth) << i.key();
    EXPECT_EQ(r.reg, reg) << i.key();
  }
}

TEST(Oracle, MatchesHochsterAfterPolarization) {
  CorpusRng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = randomIdeal(rng, {2, 3, 2, 4, 3});
    if (i.isUnit()) continue;
    PolarizedIdeal p = polarize(i);
    if (p.ideal.numVars() > 10) continue;
    auto [depth, reg] = hochster(p.ideal, FieldSpec::rationals());
    InvariantReport r = oracleInvariants(i);
    EXPECT_EQ(r.depth + p.addedVarCount, depth) << i.key();
    EXPECT_EQ(r.reg, reg) << i.key();
  }
}

TEST(Oracle, FieldDependenceThroughProjectivePlane) {
  // Stanley-Reisner ideal of the six-vertex projective plane: minimal
  // nonfaces are the ten missing triangles.
  const std::vector<std::array<int, 3>> facets{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                               {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
  std::vector<Monomial> gens;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        if (std::find(facets.begin(), facets.end(), std::array<int, 3>{a, b, c}) != facets.end()) continue;
        std::vector<int> e(6, 0);
        e[static_cast<std::size_t>(a)] = e[static_cast<std::size_t>(b)] = e[static_cast<std::size_t>(c)] = 1;
        gens.emplace_back(e);
      }
    }
  }
  MonomialIdeal i = MonomialIdeal::normalize(gens, 6);
  InvariantReport q = oracleInvariants(i, FieldSpec::rationals());
  InvariantReport f2 = oracleInvariants(i, FieldSpec::prime(2));
  EXPECT_EQ(q.depth, 3);
  EXPECT_EQ(q.reg, 2);
  EXPECT_EQ(f2.depth, 2);
  EXPECT_EQ(f2.reg, 3);
  auto [hd, hr] = hochster(i, FieldSpec::prime(2));
  EXPECT_EQ(f2.depth, hd);
  EXPECT_EQ(f2.reg, hr);
}

TEST(Oracle, BoxEnlargementIsStable) {
  CorpusRng rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal i = randomIdeal(rng, {2, 4, 2, 4, 3});
    if (i.isUnit()) continue;
    InvariantReport base = oracleInvariants(i);
    InvariantReport wide = oracleInvariants(i, FieldSpec::rationals(), Limits::fromEnvironment(), {2, true});
    EXPECT_EQ(base.depth, wide.depth);
    EXPECT_EQ(base.reg, wide.reg);
  }
}

}  // namespace
}  // namespace ideallab

#include <gtest/gtest.h>

#include "ideallab/corpus.hpp"
#include "ideallab/errors.hpp"
#include "ideallab/io.hpp"
#include "test_util.hpp"

namespace ideallab {
namespace {

std::string errorOf(const std::string& text) {
  try {
    parseIdealFile(text);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

std::string hypergraphErrorOf(const std::string& text) {
  try {
    parseHypergraphFile(text);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

TEST(IdealFile, ProductAndVectorForms) {
  IdealFile f = parseIdealFile("# comment\nvars x y z\nx^2*y  # trailing\n\n0 1 3\n");
  EXPECT_EQ(f.vars, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(f.ideal, MonomialIdeal::normalize({Monomial({2, 1, 0}), Monomial({0, 1, 3})}, 3));
}

TEST(IdealFile, UnitAndRepeatedFactors) {
  EXPECT_TRUE(parseIdealFile("vars x y\n1\n").ideal.isUnit());
  EXPECT_EQ(parseIdealFile("vars x y\nx*x*y\n").ideal.generators().front(), Monomial({2, 1}));
  EXPECT_TRUE(parseIdealFile("vars x y\n").ideal.isZero());
}

TEST(IdealFile, Errors) {
  EXPECT_NE(errorOf("vars x y\nx*w\n").find("line 2"), std::string::npos);
  EXPECT_NE(errorOf("vars x x\n").find("duplicate"), std::string::npos);
  EXPECT_FALSE(errorOf("x*y\n").empty());
  EXPECT_FALSE(errorOf("").empty());
  EXPECT_NE(errorOf("vars x y\n1 2 3\n").find("line 2"), std::string::npos);
  EXPECT_NE(errorOf("vars x y\n\n-1 2\n").find("line 3"), std::string::npos);
  EXPECT_FALSE(errorOf("vars x y\nx^-2\n").empty());
  EXPECT_FALSE(errorOf("vars x y\nx^\n").empty());
  EXPECT_THROW(readIdealFile("/nonexistent/file.ideal"), InvalidArgument);
}

TEST(IdealFile, CanonicalRoundTrip) {
  IdealFile f = parseIdealFile("vars a b c\nc^2\n1 1 0\nb*c*a\n0 3 0\n");
  std::string text = formatIdealFile(f);
  IdealFile g = parseIdealFile(text);
  EXPECT_EQ(g.vars, f.vars);
  EXPECT_EQ(g.ideal, f.ideal);
  EXPECT_EQ(formatIdealFile(g), text);
}

TEST(IdealFile, RandomRoundTrip) {
  CorpusRng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    IdealFile f{defaultVariableNames(0), randomIdeal(rng)};
    f.vars = defaultVariableNames(f.ideal.numVars());
    std::string text = formatIdealFile(f);
    IdealFile g = parseIdealFile(text);
    EXPECT_EQ(g.ideal, f.ideal);
    EXPECT_EQ(formatIdealFile(g), text);
  }
}

TEST(IdealFile, Fixtures) {
  IdealFile ex43 = readIdealFile(testing::fixture("ex43.ideal"));
  EXPECT_EQ(ex43.ideal.numVars(), 9u);
  EXPECT_EQ(ex43.ideal.size(), 10u);
  EXPECT_TRUE(ex43.ideal.isSquarefree());
  IdealFile ex410 = readIdealFile(testing::fixture("ex410.ideal"));
  EXPECT_EQ(ex410.ideal.size(), 5u);
  EXPECT_EQ(lcmDegree(ex410.ideal), 10);
}

TEST(Monomials, ParseAndFormat) {
  std::vector<std::string> v{"x", "y", "z"};
  EXPECT_EQ(parseMonomial("x^3*y", v), Monomial({3, 1, 0}));
  EXPECT_EQ(parseMonomial("1,0,2", v), Monomial({1, 0, 2}));
  EXPECT_EQ(parseMonomial("1 0 2", v), Monomial({1, 0, 2}));
  EXPECT_EQ(parseMonomial("1", v), Monomial::one(3));
  EXPECT_EQ(formatMonomial(Monomial({3, 1, 0}), v), "x^3*y");
  EXPECT_EQ(formatMonomial(Monomial::one(3), v), "1");
  EXPECT_THROW(parseMonomial("q", v), InvalidArgument);
  EXPECT_THROW(parseMonomial("1,2", v), InvalidArgument);
  EXPECT_EQ(defaultVariableNames(3), (std::vector<std::string>{"x1", "x2", "x3"}));
}

TEST(HypergraphFile, ParseAndRoundTrip) {
  Hypergraph h = readHypergraphFile(testing::fixture("c4.hg"));
  EXPECT_EQ(h.vertexCount(), 4);
  EXPECT_EQ(h.edges().size(), 4u);
  EXPECT_TRUE(h.isGraph());
  std::string text = formatHypergraphFile(h);
  EXPECT_EQ(parseHypergraphFile(text), h);
  EXPECT_EQ(formatHypergraphFile(parseHypergraphFile(text)), text);
  EXPECT_EQ(formatVertexSet(h.edges().front(), h.vertexNames()).front(), '{');
}

TEST(HypergraphFile, Errors) {
  EXPECT_NE(hypergraphErrorOf("vertices a b c\nedge a b\n").find("'c'"), std::string::npos);
  EXPECT_FALSE(hypergraphErrorOf("vertices a b\nedge a b\nedge b a\n").empty());
  EXPECT_FALSE(hypergraphErrorOf("vertices a b\nedge\n").empty());
  EXPECT_FALSE(hypergraphErrorOf("vertices a b\nedge a q\n").empty());
  EXPECT_FALSE(hypergraphErrorOf("edge a b\n").empty());
  EXPECT_FALSE(hypergraphErrorOf("vertices a a\nedge a\n").empty());
  // containment is accepted at load time
  Hypergraph nested = parseHypergraphFile("vertices a b c\nedge a b\nedge a b c\n");
  EXPECT_FALSE(nested.isAntichain());
  try {
    nested.requireAntichain();
    FAIL();
  } catch (const InvalidArgument& e) {
    std::string what = e.what();
    EXPECT_NE(what.find("{a b}"), std::string::npos);
    EXPECT_NE(what.find("{a b c}"), std::string::npos);
  }
}

}  // namespace
}  // namespace ideallab

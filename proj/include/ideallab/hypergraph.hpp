#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ideallab/bits.hpp"
#include "ideallab/monomial_ideal.hpp"
#include "ideallab/simplicial_complex.hpp"

namespace ideallab {

/// Hypergraph on named vertices; edges are vertex bitsets.
///
/// The vertex list is the variable list of the ambient polynomial ring, so
/// derived hypergraphs (H:x, H-x) keep it even when some vertex becomes
/// isolated. Loaded hypergraphs are validated with `requireSimple`.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Deduplicates edges. Throws InvalidArgument for out-of-range vertices or
  /// more than 64 vertices.
  Hypergraph(std::vector<std::string> vertexNames, std::vector<VertexSet> edges);
  /// Vertices named "0", "1", ...
  static Hypergraph anonymous(int vertexCount, std::vector<VertexSet> edges);

  int vertexCount() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertexNames() const { return names_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet vertexSupport() const;
  int vertexIndex(const std::string& name) const;

  /// First pair (i, j) of edge indices with edges[i] ⊂ edges[j].
  std::optional<std::pair<std::size_t, std::size_t>> containedPair() const;
  bool isAntichain() const { return !containedPair().has_value(); }
  bool isGraph() const;

  /// Throws InvalidArgument if some vertex lies in no edge or an edge is empty.
  void requireSimple() const;
  /// Throws InvalidArgument naming the offending pair if an edge contains another.
  void requireAntichain() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> edges_;
};

/// Simple graph: a hypergraph whose edges all have two vertices.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument unless every edge has exactly two vertices.
  explicit Graph(Hypergraph h);
  static Graph fromEdges(int vertexCount, const std::vector<std::pair<int, int>>& edges);
  /// Graph with the given adjacency bitsets (symmetric, loop-free).
  static Graph fromAdjacency(const std::vector<VertexSet>& adjacency);

  int vertexCount() const { return h_.vertexCount(); }
  const Hypergraph& hypergraph() const { return h_; }
  const std::vector<VertexSet>& edges() const { return h_.edges(); }
  VertexSet neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (adjacency_[static_cast<std::size_t>(u)] & singleton(v)) != 0; }

  Graph complement() const;
  /// Subgraph induced on `vertices`, relabelled 0..k-1 in increasing order.
  Graph induced(VertexSet vertices) const;

 private:
  Hypergraph h_;
  std::vector<VertexSet> adjacency_;
};

/// Pairwise disjoint graph edges.
struct Matching {
  std::vector<VertexSet> edges;
  bool isPerfectFor(const Graph& g) const;
};

/// Squarefree ideal with one generator per edge, variables = vertices.
MonomialIdeal edgeIdeal(const Hypergraph& h);

/// H:x, the minimal sets among F \ {x} over the edges F.
Hypergraph colonHypergraph(const Hypergraph& h, int x);
/// H-x, the edges not containing x.
Hypergraph deleteVertex(const Hypergraph& h, int x);

/// Index of an edge whose intersections with all other edges form a chain.
std::optional<std::size_t> goodLeaf(const Hypergraph& h);

/// Perfect elimination check of a maximum-cardinality-search ordering.
bool isChordal(const Graph& g);
/// Maximum cardinality search order (visit order, first visited first).
std::vector<int> maximumCardinalitySearch(const Graph& g);

struct PatternFlags {
  bool clawFree = true;
  bool gapFree = true;
  std::vector<std::pair<int, int>> twins;
};
PatternFlags patternChecks(const Graph& g);

enum class CoverClass { WellCovered, VeryWellCovered, Neither };
std::string coverClassName(CoverClass c);

struct CoverClassification {
  CoverClass kind = CoverClass::Neither;
  /// Two maximal independent sets of different sizes when kind is Neither;
  /// otherwise one maximal independent set.
  std::vector<VertexSet> witness;
};
/// Enumerates maximal independent sets; at most 24 vertices.
CoverClassification coverClassification(const Graph& g);
/// Same, from symmetric loop-free adjacency bitsets; used by bulk sweeps.
CoverClassification coverClassification(const std::vector<VertexSet>& adjacency);
std::vector<VertexSet> maximalIndependentSets(const Graph& g);

/// All perfect matchings, by backtracking on the lowest unmatched vertex.
std::vector<Matching> perfectMatchings(const Graph& g);

struct FavaronFlags {
  bool noTriangleEdge = true;
  bool pathEndpointAdjacency = true;
  bool noC4TwoMatchingEdges = true;
};
/// Throws InvalidArgument unless `m` is a perfect matching of `g`.
FavaronFlags favaronChecks(const Graph& g, const Matching& m);
/// Same, from adjacency bitsets; `m` is assumed to be a perfect matching.
FavaronFlags favaronChecks(const std::vector<VertexSet>& adjacency, const Matching& m);

/// depth R/I(H) = dim R/I(H) over `field`.
bool isCohenMacaulay(const Hypergraph& h, FieldSpec field = FieldSpec::rationals(),
                     const Limits& limits = Limits::fromEnvironment());

/// Every H:x is a graph (all minimal sets of size exactly 2) with chordal
/// complement.
bool reg3Hypothesis(const Hypergraph& h);

}  // namespace ideallab

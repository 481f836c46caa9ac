#include "ideallab/hypergraph.hpp"

#include <algorithm>
#include <bit>

#include "ideallab/errors.hpp"
#include "ideallab/takayama.hpp"

namespace ideallab {

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(std::vector<std::string> vertexNames, std::vector<VertexSet> edges)
    : names_(std::move(vertexNames)) {
  if (names_.size() > 64) throw InvalidArgument("hypergraphs support at most 64 vertices");
  const VertexSet allowed = fullSet(static_cast<int>(names_.size()));
  for (VertexSet e : edges) {
    if (!isSubset(e, allowed)) throw InvalidArgument("edge uses an unknown vertex");
    if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) edges_.push_back(e);
  }
}

Hypergraph Hypergraph::anonymous(int vertexCount, std::vector<VertexSet> edges) {
  std::vector<std::string> names;
  for (int v = 0; v < vertexCount; ++v) names.push_back(std::to_string(v));
  return Hypergraph(std::move(names), std::move(edges));
}

VertexSet Hypergraph::vertexSupport() const {
  VertexSet s = 0;
  for (VertexSet e : edges_) s |= e;
  return s;
}

int Hypergraph::vertexIndex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidArgument("unknown vertex '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

std::optional<std::pair<std::size_t, std::size_t>> Hypergraph::containedPair() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i != j && isSubset(edges_[i], edges_[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool Hypergraph::isGraph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return cardinality(e) == 2; });
}

void Hypergraph::requireSimple() const {
  for (VertexSet e : edges_) {
    if (e == 0) throw InvalidArgument("hypergraph has an empty edge");
  }
  VertexSet isolated = fullSet(vertexCount()) & ~vertexSupport();
  if (isolated != 0) {
    throw InvalidArgument("vertex '" + names_[static_cast<std::size_t>(std::countr_zero(isolated))] +
                          "' lies in no edge");
  }
}

void Hypergraph::requireAntichain() const {
  auto render = [this](VertexSet e) {
    std::string s = "{";
    bool first = true;
    forEachElement(e, [&](int v) {
      if (!first) s += ' ';
      s += names_[static_cast<std::size_t>(v)];
      first = false;
    });
    return s + "}";
  };
  if (auto pair = containedPair()) {
    throw InvalidArgument("edge " + render(edges_[pair->first]) + " is contained in edge " +
                          render(edges_[pair->second]));
  }
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(Hypergraph h) : h_(std::move(h)), adjacency_(static_cast<std::size_t>(h_.vertexCount()), 0) {
  for (VertexSet e : h_.edges()) {
    if (cardinality(e) != 2) throw InvalidArgument("graph edges must have exactly two vertices");
    int u = std::countr_zero(e);
    int v = 63 - std::countl_zero(e);
    adjacency_[static_cast<std::size_t>(u)] |= singleton(v);
    adjacency_[static_cast<std::size_t>(v)] |= singleton(u);
  }
}

Graph Graph::fromEdges(int vertexCount, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSet> sets;
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= vertexCount || v >= vertexCount) {
      throw InvalidArgument("invalid graph edge");
    }
    sets.push_back(singleton(u) | singleton(v));
  }
  return Graph(Hypergraph::anonymous(vertexCount, std::move(sets)));
}

Graph Graph::fromAdjacency(const std::vector<VertexSet>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<VertexSet> sets;
  for (int u = 0; u < n; ++u) {
    forEachElement(adjacency[static_cast<std::size_t>(u)], [&](int v) {
      if (v > u) sets.push_back(singleton(u) | singleton(v));
    });
  }
  return Graph(Hypergraph::anonymous(n, std::move(sets)));
}

Graph Graph::complement() const {
  const int n = vertexCount();
  std::vector<VertexSet> sets;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!adjacent(u, v)) sets.push_back(singleton(u) | singleton(v));
    }
  }
  return Graph(Hypergraph(h_.vertexNames(), std::move(sets)));
}

Graph Graph::induced(VertexSet vertices) const {
  std::vector<int> keep = elements(vertices & fullSet(vertexCount()));
  std::vector<std::string> names;
  for (int v : keep) names.push_back(h_.vertexNames()[static_cast<std::size_t>(v)]);
  std::vector<VertexSet> sets;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (adjacent(keep[a], keep[b])) sets.push_back(singleton(static_cast<int>(a)) | singleton(static_cast<int>(b)));
    }
  }
  return Graph(Hypergraph(std::move(names), std::move(sets)));
}

bool Matching::isPerfectFor(const Graph& g) const {
  VertexSet covered = 0;
  for (VertexSet e : edges) {
    if (cardinality(e) != 2 || (covered & e) != 0) return false;
    int u = std::countr_zero(e);
    int v = 63 - std::countl_zero(e);
    if (v >= g.vertexCount() || !g.adjacent(u, v)) return false;
    covered |= e;
  }
  return covered == fullSet(g.vertexCount());
}

// ---------------------------------------------------------------------------
// Edge ideals and hypergraph operations

MonomialIdeal edgeIdeal(const Hypergraph& h) {
  h.requireAntichain();
  const auto n = static_cast<std::size_t>(h.vertexCount());
  std::vector<Monomial> gens;
  for (VertexSet e : h.edges()) {
    std::vector<int> exps(n, 0);
    forEachElement(e, [&](int v) { exps[static_cast<std::size_t>(v)] = 1; });
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::normalize(std::move(gens), n);
}

Hypergraph colonHypergraph(const Hypergraph& h, int x) {
  if (x < 0 || x >= h.vertexCount()) throw InvalidArgument("colonHypergraph: unknown vertex");
  std::vector<VertexSet> sets;
  for (VertexSet e : h.edges()) sets.push_back(e & ~singleton(x));
  return Hypergraph(h.vertexNames(), minimalSets(std::move(sets)));
}

Hypergraph deleteVertex(const Hypergraph& h, int x) {
  if (x < 0 || x >= h.vertexCount()) throw InvalidArgument("deleteVertex: unknown vertex");
  std::vector<VertexSet> sets;
  for (VertexSet e : h.edges()) {
    if ((e & singleton(x)) == 0) sets.push_back(e);
  }
  return Hypergraph(h.vertexNames(), std::move(sets));
}

std::optional<std::size_t> goodLeaf(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<VertexSet> cuts;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i) cuts.push_back(edges[i] & edges[j]);
    }
    std::sort(cuts.begin(), cuts.end(), [](VertexSet a, VertexSet b) { return cardinality(a) < cardinality(b); });
    bool chain = true;
    for (std::size_t k = 1; k < cuts.size() && chain; ++k) chain = isSubset(cuts[k - 1], cuts[k]);
    if (chain) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chordality and induced patterns

std::vector<int> maximumCardinalitySearch(const Graph& g) {
  const int n = g.vertexCount();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  VertexSet visited = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if ((visited & singleton(v)) == 0 && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])) {
        best = v;
      }
    }
    visited |= singleton(best);
    order.push_back(best);
    forEachElement(g.neighbors(best) & ~visited, [&](int u) { ++weight[static_cast<std::size_t>(u)]; });
  }
  return order;
}

bool isChordal(const Graph& g) {
  // The reverse of an MCS order is a perfect elimination ordering iff the
  // graph is chordal: every vertex's earlier-visited neighbours form a clique.
  VertexSet earlier = 0;
  for (int v : maximumCardinalitySearch(g)) {
    VertexSet back = g.neighbors(v) & earlier;
    bool clique = true;
    forEachElement(back, [&](int w) {
      if (!isSubset(back & ~singleton(w), g.neighbors(w))) clique = false;
    });
    if (!clique) return false;
    earlier |= singleton(v);
  }
  return true;
}

PatternFlags patternChecks(const Graph& g) {
  const int n = g.vertexCount();
  PatternFlags flags;
  for (int c = 0; c < n && flags.clawFree; ++c) {
    std::vector<int> nb = elements(g.neighbors(c));
    for (std::size_t a = 0; a < nb.size() && flags.clawFree; ++a) {
      for (std::size_t b = a + 1; b < nb.size() && flags.clawFree; ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        VertexSet third = g.neighbors(c) & ~g.neighbors(nb[a]) & ~g.neighbors(nb[b]) & ~singleton(nb[a]) & ~singleton(nb[b]);
        if (third != 0) flags.clawFree = false;
      }
    }
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size() && flags.gapFree; ++i) {
    for (std::size_t j = i + 1; j < edges.size() && flags.gapFree; ++j) {
      if ((edges[i] & edges[j]) != 0) continue;
      bool linked = false;
      forEachElement(edges[i], [&](int u) {
        if ((g.neighbors(u) & edges[j]) != 0) linked = true;
      });
      if (!linked) flags.gapFree = false;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.neighbors(u) == g.neighbors(v)) flags.twins.emplace_back(u, v);
    }
  }
  return flags;
}

// ---------------------------------------------------------------------------
// Independent sets, covers, matchings

namespace {

// Bron–Kerbosch with pivoting on the complement graph: cliques there are
// independent sets here. `visit` returns false to stop the enumeration.
template <typename F>
bool enumerateMaximalIndependent(const std::vector<VertexSet>& adj, VertexSet current, VertexSet candidates,
                                 VertexSet excluded, F& visit) {
  if (candidates == 0 && excluded == 0) return visit(current);
  // Pivot: the vertex with the most non-neighbours among the candidates.
  int pivot = -1, best = -1;
  forEachElement(candidates | excluded, [&](int u) {
    int c = cardinality(candidates & ~adj[static_cast<std::size_t>(u)] & ~singleton(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  VertexSet branch = candidates & (adj[static_cast<std::size_t>(pivot)] | singleton(pivot));
  for (int v : elements(branch)) {
    VertexSet nonAdjacent = ~adj[static_cast<std::size_t>(v)] & ~singleton(v);
    if (!enumerateMaximalIndependent(adj, current | singleton(v), candidates & nonAdjacent, excluded & nonAdjacent,
                                     visit)) {
      return false;
    }
    candidates &= ~singleton(v);
    excluded |= singleton(v);
  }
  return true;
}

std::vector<VertexSet> adjacencyOf(const Graph& g) {
  std::vector<VertexSet> adj;
  for (int v = 0; v < g.vertexCount(); ++v) adj.push_back(g.neighbors(v));
  return adj;
}

}  // namespace

std::string coverClassName(CoverClass c) {
  switch (c) {
    case CoverClass::WellCovered: return "WELL_COVERED";
    case CoverClass::VeryWellCovered: return "VERY_WELL_COVERED";
    case CoverClass::Neither: return "NEITHER";
  }
  return "NEITHER";
}

std::vector<VertexSet> maximalIndependentSets(const Graph& g) {
  if (g.vertexCount() > 24) throw CapExceeded("independent-set enumeration is capped at 24 vertices");
  std::vector<VertexSet> out;
  auto collect = [&](VertexSet s) {
    out.push_back(s);
    return true;
  };
  enumerateMaximalIndependent(adjacencyOf(g), 0, fullSet(g.vertexCount()), 0, collect);
  std::sort(out.begin(), out.end());
  return out;
}

CoverClassification coverClassification(const std::vector<VertexSet>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > 24) throw CapExceeded("cover classification is capped at 24 vertices");
  CoverClassification result;
  auto check = [&](VertexSet s) {
    if (result.witness.empty()) {
      result.witness.push_back(s);
      return true;
    }
    if (cardinality(s) != cardinality(result.witness.front())) {
      result.witness.push_back(s);
      return false;
    }
    return true;
  };
  bool uniform = enumerateMaximalIndependent(adjacency, 0, fullSet(n), 0, check);
  if (!uniform) {
    result.kind = CoverClass::Neither;
  } else {
    int size = result.witness.empty() ? 0 : cardinality(result.witness.front());
    result.kind = 2 * size == n ? CoverClass::VeryWellCovered : CoverClass::WellCovered;
  }
  return result;
}

CoverClassification coverClassification(const Graph& g) { return coverClassification(adjacencyOf(g)); }

std::vector<Matching> perfectMatchings(const Graph& g) {
  if (g.vertexCount() > 24) throw CapExceeded("perfect matching enumeration is capped at 24 vertices");
  std::vector<Matching> out;
  Matching current;
  const VertexSet all = fullSet(g.vertexCount());
  auto extend = [&](auto& self, VertexSet matched) -> void {
    if (matched == all) {
      out.push_back(current);
      return;
    }
    int v = std::countr_zero(~matched);
    forEachElement(g.neighbors(v) & ~matched, [&](int u) {
      current.edges.push_back(singleton(v) | singleton(u));
      self(self, matched | singleton(v) | singleton(u));
      current.edges.pop_back();
    });
  };
  extend(extend, 0);
  return out;
}

FavaronFlags favaronChecks(const std::vector<VertexSet>& adj, const Matching& m) {
  auto adjacent = [&](int u, int v) { return (adj[static_cast<std::size_t>(u)] & singleton(v)) != 0; };
  FavaronFlags flags;
  for (VertexSet e : m.edges) {
    int u = std::countr_zero(e);
    int v = 63 - std::countl_zero(e);
    const VertexSet nu = adj[static_cast<std::size_t>(u)];
    const VertexSet nv = adj[static_cast<std::size_t>(v)];
    if ((nu & nv) != 0) flags.noTriangleEdge = false;
    // Paths a-u-v-b and a-v-u-b on four distinct vertices.
    for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
      forEachElement(adj[static_cast<std::size_t>(p)] & ~singleton(q), [&](int a) {
        VertexSet ends = adj[static_cast<std::size_t>(q)] & ~singleton(p) & ~singleton(a);
        if (!isSubset(ends, adj[static_cast<std::size_t>(a)])) flags.pathEndpointAdjacency = false;
      });
    }
  }
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
      int a = std::countr_zero(m.edges[i]), b = 63 - std::countl_zero(m.edges[i]);
      int c = std::countr_zero(m.edges[j]), d = 63 - std::countl_zero(m.edges[j]);
      if ((adjacent(b, c) && adjacent(a, d)) || (adjacent(b, d) && adjacent(a, c))) {
        flags.noC4TwoMatchingEdges = false;
      }
    }
  }
  return flags;
}

FavaronFlags favaronChecks(const Graph& g, const Matching& m) {
  if (!m.isPerfectFor(g)) throw InvalidArgument("favaronChecks requires a perfect matching");
  return favaronChecks(adjacencyOf(g), m);
}

bool isCohenMacaulay(const Hypergraph& h, FieldSpec field, const Limits& limits) {
  MonomialIdeal ideal = edgeIdeal(h);
  return depthOracle(ideal, field, limits).value == dimension(ideal);
}

bool reg3Hypothesis(const Hypergraph& h) {
  h.requireAntichain();
  bool holds = true;
  forEachElement(h.vertexSupport(), [&](int x) {
    if (!holds) return;
    Hypergraph c = colonHypergraph(h, x);
    if (!c.isGraph()) {
      holds = false;
      return;
    }
    holds = isChordal(Graph(c).complement());
  });
  return holds;
}

}  // namespace ideallab

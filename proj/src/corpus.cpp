#include "ideallab/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ideallab/errors.hpp"

namespace ideallab {

std::uint64_t CorpusRng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("CorpusRng::below needs a positive bound");
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t excess = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - excess;
  while (true) {
    std::uint64_t v = engine_();
    if (excess == 0 || v <= limit) return v % bound;
  }
}

int CorpusRng::uniform(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

MonomialIdeal randomIdeal(CorpusRng& rng, const IdealShape& shape) {
  const auto n = static_cast<std::size_t>(rng.uniform(shape.minVars, shape.maxVars));
  const int count = rng.uniform(shape.minGens, shape.maxGens);
  std::vector<Monomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    std::vector<int> exps(n);
    for (auto& e : exps) e = rng.uniform(0, shape.maxExponent);
    if (std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; })) continue;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::normalize(std::move(gens), n);
}

std::optional<Monomial> randomMonomialOutside(CorpusRng& rng, const MonomialIdeal& ideal, int maxDegree) {
  const std::size_t n = ideal.numVars();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<int> exps(n, 0);
    const int degree = rng.uniform(1, maxDegree);
    for (int k = 0; k < degree; ++k) ++exps[rng.below(n)];
    Monomial f(std::move(exps));
    if (!ideal.contains(f)) return f;
  }
  return std::nullopt;
}

std::vector<int> heaviestVariables(const MonomialIdeal& ideal, std::size_t count) {
  const std::size_t n = ideal.numVars();
  std::vector<int> weight(n, 0);
  for (const Monomial& g : ideal.generators()) {
    for (std::size_t j = 0; j < n; ++j) weight[j] += g[j];
  }
  std::vector<int> order;
  for (std::size_t j = 0; j < n; ++j) {
    if (weight[j] > 0) order.push_back(static_cast<int>(j));
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)];
  });
  if (order.size() > count) order.resize(count);
  return order;
}

Hypergraph restrictToSupport(const Hypergraph& h) {
  std::vector<int> keep = elements(h.vertexSupport());
  std::vector<std::string> names;
  for (int v : keep) names.push_back(h.vertexNames()[static_cast<std::size_t>(v)]);
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    VertexSet mapped = 0;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (e & singleton(keep[k])) mapped |= singleton(static_cast<int>(k));
    }
    edges.push_back(mapped);
  }
  return Hypergraph(std::move(names), std::move(edges));
}

Hypergraph randomAntichainHypergraph(CorpusRng& rng, int maxVertices, int maxEdges) {
  const int n = rng.uniform(2, maxVertices);
  const int m = rng.uniform(1, maxEdges);
  std::vector<VertexSet> edges;
  for (int k = 0; k < m; ++k) edges.push_back(1 + rng.below(fullSet(n)));
  return restrictToSupport(Hypergraph::anonymous(n, minimalSets(std::move(edges))));
}

std::vector<VertexSet> randomAdjacency(CorpusRng& rng, int n) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin()) {
        adj[static_cast<std::size_t>(u)] |= singleton(v);
        adj[static_cast<std::size_t>(v)] |= singleton(u);
      }
    }
  }
  return adj;
}

}  // namespace ideallab

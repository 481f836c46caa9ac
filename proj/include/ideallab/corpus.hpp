#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ideallab/hypergraph.hpp"
#include "ideallab/monomial_ideal.hpp"

namespace ideallab {

/// Reproducible random source for the verification corpus.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded integers are drawn by rejection: with range r, raw
/// values at or above 2^64 - (2^64 mod r) are discarded and the rest are
/// reduced mod r. This avoids the implementation-defined
/// std::uniform_int_distribution, so the corpus is the same on every platform.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Shape of random ideals: n in [minVars, maxVars], generator count in
/// [minGens, maxGens], every exponent in [0, maxExponent]. An all-zero
/// generator is redrawn.
struct IdealShape {
  int minVars = 2;
  int maxVars = 5;
  int minGens = 2;
  int maxGens = 6;
  int maxExponent = 4;
};

/// Draws n, then the generators one exponent at a time in variable order,
/// then normalizes.
MonomialIdeal randomIdeal(CorpusRng& rng, const IdealShape& shape = {});

/// Monomial of degree drawn from [1, maxDegree] (each factor a uniformly
/// chosen variable) that does not lie in `ideal`; nullopt after 64 failed
/// draws.
std::optional<Monomial> randomMonomialOutside(CorpusRng& rng, const MonomialIdeal& ideal, int maxDegree = 3);

/// Up to three variables of largest total exponent across the generators,
/// ties to the lowest index. Variables not in the support are never chosen.
std::vector<int> heaviestVariables(const MonomialIdeal& ideal, std::size_t count = 3);

/// Antichain hypergraph: vertex count in [2, maxVertices], edge count in
/// [1, maxEdges], each edge a uniformly random nonempty subset; the edge
/// family is reduced to its minimal members and isolated vertices dropped.
Hypergraph randomAntichainHypergraph(CorpusRng& rng, int maxVertices = 6, int maxEdges = 5);

/// Adjacency of a G(n, 1/2) random graph.
std::vector<VertexSet> randomAdjacency(CorpusRng& rng, int n);

/// Keeps only vertices that lie in some edge, relabelled in order.
Hypergraph restrictToSupport(const Hypergraph& h);

}  // namespace ideallab

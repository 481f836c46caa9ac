#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ideallab/bits.hpp"

namespace ideallab {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Parses "q" or "f<p>" (e.g. "f2").
  static FieldSpec parse(const std::string& text);

  bool isRationals() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {}
  std::uint32_t characteristic_;
};

/// Simplicial complex on at most 64 vertices, stored by its facets.
///
/// Two degenerate complexes are distinguished: the void complex (no faces
/// at all, empty facet list) and the irrelevant complex {∅} (one empty facet).
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 64;

  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal members of `faces`. An empty list gives the
  /// void complex. Throws InvalidArgument for vertices >= vertexCount.
  static SimplicialComplex fromFacets(int vertexCount, std::vector<VertexSet> faces);
  static SimplicialComplex voidComplex(int vertexCount) { return fromFacets(vertexCount, {}); }
  static SimplicialComplex irrelevant(int vertexCount) { return fromFacets(vertexCount, {0}); }

  int vertexCount() const { return vertexCount_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool isVoid() const { return facets_.empty(); }
  bool isIrrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }
  /// -2 for void, -1 for {∅}.
  int dimension() const;

  bool contains(VertexSet face) const;
  /// Every face including ∅, ascending by size then value.
  std::vector<VertexSet> faces() const;
  /// Vertices that occur in some facet.
  VertexSet vertexSupport() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertexCount_ = 0;
  std::vector<VertexSet> facets_;
};

/// Ranks of reduced homology H̃_{-1}, H̃_0, ..., H̃_{dim} over `field`.
///
/// Entry d+1 of the result is the rank of H̃_d. The void complex yields {0}.
/// Over the rationals boundary ranks come from fraction-free (Bareiss)
/// elimination; over GF(p) from modular elimination.
std::vector<std::int64_t> reducedHomologyRanks(const SimplicialComplex& complex, FieldSpec field);

/// Reduced homology ranks of the complex on `groundSet` whose minimal
/// nonfaces are `nonfaces` (each a nonempty subset of `groundSet`), padded to
/// dimension |groundSet| - 1. With fewer nonfaces than ground vertices the
/// ranks are read off the Alexander dual, whose facets are the complements
/// of the nonfaces: rank H̃_i(Δ) = rank H̃_{m-i-3}(Δ^∨), m = |groundSet|.
std::vector<std::int64_t> reducedHomologyFromNonfaces(VertexSet groundSet, const std::vector<VertexSet>& nonfaces,
                                                      FieldSpec field);

/// Rank of H̃_d read from a rank vector, zero outside its range.
std::int64_t homologyRank(const std::vector<std::int64_t>& ranks, int d);

/// Rank of an integer matrix over `field`. Exposed for tests.
std::int64_t matrixRank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field);

}  // namespace ideallab

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ideallab {

/// Subset of {0, ..., 63}, one bit per element.
using VertexSet = std::uint64_t;

inline int cardinality(VertexSet s) { return std::popcount(s); }
inline bool isSubset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline VertexSet singleton(int v) { return VertexSet{1} << v; }
inline VertexSet fullSet(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

template <typename F>
void forEachElement(VertexSet s, F&& f) {
  while (s != 0) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> elements(VertexSet s);

/// Inclusion-minimal members of `sets`, sorted ascending and deduplicated.
std::vector<VertexSet> minimalSets(std::vector<VertexSet> sets);

/// Inclusion-maximal members of `sets`, sorted ascending and deduplicated.
std::vector<VertexSet> maximalSets(std::vector<VertexSet> sets);

/// All inclusion-minimal sets meeting every member of `family` (Berge's
/// incremental algorithm). An empty member makes the result empty; an empty
/// family yields the single transversal {}.
std::vector<VertexSet> minimalTransversals(const std::vector<VertexSet>& family);

}  // namespace ideallab

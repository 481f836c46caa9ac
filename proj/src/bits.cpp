#include "ideallab/bits.hpp"

#include <algorithm>

namespace ideallab {

std::vector<int> elements(VertexSet s) {
  std::vector<int> out;
  forEachElement(s, [&](int v) { out.push_back(v); });
  return out;
}

std::vector<VertexSet> minimalSets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca < cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return isSubset(k, s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexSet> maximalSets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca > cb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return isSubset(s, k); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexSet> minimalTransversals(const std::vector<VertexSet>& family) {
  std::vector<VertexSet> current{0};
  for (VertexSet edge : minimalSets(family)) {
    if (edge == 0) return {};
    std::vector<VertexSet> next;
    next.reserve(current.size() * 2);
    for (VertexSet t : current) {
      if ((t & edge) != 0) {
        next.push_back(t);
      } else {
        forEachElement(edge, [&](int v) { next.push_back(t | singleton(v)); });
      }
    }
    current = minimalSets(std::move(next));
  }
  return current;
}

}  // namespace ideallab

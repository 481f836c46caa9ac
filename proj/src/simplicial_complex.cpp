#include "ideallab/simplicial_complex.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "ideallab/errors.hpp"

namespace ideallab {

// ---------------------------------------------------------------------------
// FieldSpec

namespace {

bool isPrime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !isPrime(p)) {
    throw InvalidArgument("field characteristic must be a prime below 2^31");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::string digits = text.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() <= 10) {
      unsigned long long p = std::stoull(digits);
      if (p < (1ull << 31)) return prime(static_cast<std::uint32_t>(p));
    }
  }
  throw InvalidArgument("field must be 'q' or 'f<p>' with p prime, got '" + text + "'");
}

std::string FieldSpec::name() const { return isRationals() ? "q" : "f" + std::to_string(characteristic_); }

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::fromFacets(int vertexCount, std::vector<VertexSet> faces) {
  if (vertexCount < 0 || vertexCount > kMaxVertices) throw InvalidArgument("complexes support at most 64 vertices");
  const VertexSet allowed = fullSet(vertexCount);
  for (VertexSet f : faces) {
    if (!isSubset(f, allowed)) throw InvalidArgument("face uses a vertex outside the vertex range");
  }
  SimplicialComplex c;
  c.vertexCount_ = vertexCount;
  c.facets_ = maximalSets(std::move(faces));
  return c;
}

int SimplicialComplex::dimension() const {
  if (isVoid()) return -2;
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, cardinality(f) - 1);
  return d;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return isSubset(face, f); });
}

VertexSet SimplicialComplex::vertexSupport() const {
  VertexSet s = 0;
  for (VertexSet f : facets_) s |= f;
  return s;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet> seen;
  std::vector<VertexSet> out;
  std::vector<VertexSet> stack(facets_.begin(), facets_.end());
  while (!stack.empty()) {
    VertexSet f = stack.back();
    stack.pop_back();
    if (!seen.insert(f).second) continue;
    out.push_back(f);
    forEachElement(f, [&](int v) {
      VertexSet sub = f & ~singleton(v);
      if (!seen.count(sub)) stack.push_back(sub);
    });
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    int ca = cardinality(a), cb = cardinality(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t rankModP(std::vector<std::vector<std::int64_t>> rows, std::uint32_t p) {
  const auto mod = static_cast<std::int64_t>(p);
  auto reduce = [mod](std::int64_t v) {
    v %= mod;
    return v < 0 ? v + mod : v;
  };
  auto inverse = [mod](std::int64_t a) {
    std::int64_t result = 1, base = a, e = mod - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % mod);
      base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % mod);
      e >>= 1;
    }
    return result;
  };
  for (auto& row : rows) {
    for (auto& v : row) v = reduce(v);
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::int64_t inv = inverse(rows[rank][c]);
    for (auto& v : rows[rank]) v = static_cast<std::int64_t>((static_cast<__int128>(v) * inv) % mod);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::int64_t factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t t = c; t < cols; ++t) {
        rows[r][t] = reduce(rows[r][t] - static_cast<std::int64_t>((static_cast<__int128>(factor) * rows[rank][t]) % mod));
      }
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

// Fraction-free Gaussian elimination; every intermediate entry is a minor
// of the input, and the division by the previous pivot is exact.
template <typename Int>
std::int64_t bareissRank(std::vector<std::vector<Int>> rows, bool& overflow) {
  overflow = false;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::size_t rank = 0;
  Int previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Int p = rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Int lead = rows[r][c];
      for (std::size_t t = c + 1; t < cols; ++t) {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
          std::int64_t a = 0, b = 0;
          if (__builtin_mul_overflow(rows[r][t], p, &a) || __builtin_mul_overflow(rows[rank][t], lead, &b) ||
              __builtin_sub_overflow(a, b, &a)) {
            overflow = true;
            return 0;
          }
          rows[r][t] = a / previous;
        } else {
          rows[r][t] = (rows[r][t] * p - rows[rank][t] * lead) / previous;
        }
      }
      rows[r][c] = 0;
    }
    previous = p;
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

std::int64_t rankRationals(const std::vector<std::vector<std::int64_t>>& rows) {
  bool overflow = false;
  std::int64_t r = bareissRank<std::int64_t>(rows, overflow);
  if (!overflow) return r;
  std::vector<std::vector<BigInt>> big(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) big[i].assign(rows[i].begin(), rows[i].end());
  return bareissRank<BigInt>(std::move(big), overflow);
}

// Homology of a complex with at least one nonempty facet, computed from the
// full face list.
std::vector<std::int64_t> directRanks(const std::vector<VertexSet>& facets, FieldSpec field) {
  SimplicialComplex c = SimplicialComplex::fromFacets(SimplicialComplex::kMaxVertices, facets);
  const int dim = c.dimension();
  std::vector<std::vector<VertexSet>> byDim(static_cast<std::size_t>(dim + 2));
  for (VertexSet f : c.faces()) byDim[static_cast<std::size_t>(cardinality(f))].push_back(f);

  // rankBoundary[d] = rank of the boundary map C_d -> C_{d-1}, index d+1.
  std::vector<std::int64_t> boundaryRank(static_cast<std::size_t>(dim + 3), 0);
#ifndef NDEBUG
  std::vector<std::vector<std::vector<std::int64_t>>> kept;
#endif
  for (int d = 0; d <= dim; ++d) {
    const auto& upper = byDim[static_cast<std::size_t>(d + 1)];
    const auto& lower = byDim[static_cast<std::size_t>(d)];
    std::unordered_map<VertexSet, std::size_t> index;
    for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);
    std::vector<std::vector<std::int64_t>> matrix(upper.size(), std::vector<std::int64_t>(lower.size(), 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
      std::int64_t sign = 1;
      forEachElement(upper[r], [&](int v) {
        matrix[r][index.at(upper[r] & ~singleton(v))] = sign;
        sign = -sign;
      });
    }
#ifndef NDEBUG
    kept.push_back(matrix);
    if (kept.size() >= 2) {
      const auto& a = kept[kept.size() - 1];  // C_d -> C_{d-1}
      const auto& b = kept[kept.size() - 2];  // C_{d-1} -> C_{d-2}
      for (const auto& row : a) {
        for (std::size_t t = 0; t < b.front().size(); ++t) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * b[k][t];
          assert(s == 0 && "boundary of a boundary must vanish");
        }
      }
    }
#endif
    boundaryRank[static_cast<std::size_t>(d + 1)] =
        field.isRationals() ? rankRationals(matrix) : rankModP(std::move(matrix), field.characteristic());
  }
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(dim + 2), 0);
  for (int d = -1; d <= dim; ++d) {
    auto chains = static_cast<std::int64_t>(byDim[static_cast<std::size_t>(d + 1)].size());
    ranks[static_cast<std::size_t>(d + 1)] =
        chains - boundaryRank[static_cast<std::size_t>(d + 1)] - boundaryRank[static_cast<std::size_t>(d + 2)];
  }
  return ranks;
}

std::vector<std::int64_t> ranksFromFacets(std::vector<VertexSet> facets, FieldSpec field, int targetDim);

// Nerve of the facet cover: vertices are facets, faces are families with a
// common vertex. Homotopy equivalent to the complex by the nerve lemma.
std::vector<std::int64_t> nerveRanks(const std::vector<VertexSet>& facets, FieldSpec field, int targetDim) {
  const int m = static_cast<int>(facets.size());
  std::vector<VertexSet> nerveFacets;
  // Maximal families are exactly the stars of single vertices.
  VertexSet vertices = 0;
  for (VertexSet f : facets) vertices |= f;
  forEachElement(vertices, [&](int v) {
    VertexSet family = 0;
    for (int k = 0; k < m; ++k) {
      if (facets[static_cast<std::size_t>(k)] & singleton(v)) family |= singleton(k);
    }
    nerveFacets.push_back(family);
  });
  return ranksFromFacets(maximalSets(std::move(nerveFacets)), field, targetDim);
}

std::vector<std::int64_t> ranksFromFacets(std::vector<VertexSet> facets, FieldSpec field, int targetDim) {
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(targetDim + 2), 0);
  if (facets.empty()) return ranks;
  if (facets.size() == 1 && facets.front() == 0) {
    ranks[0] = 1;
    return ranks;
  }
  VertexSet common = facets.front();
  VertexSet all = 0;
  for (VertexSet f : facets) {
    common &= f;
    all |= f;
  }
  if (common != 0) return ranks;  // cone

  std::vector<std::int64_t> computed =
      static_cast<int>(facets.size()) < cardinality(all) ? nerveRanks(facets, field, targetDim)
                                                          : directRanks(facets, field);
  for (std::size_t k = 0; k < computed.size() && k < ranks.size(); ++k) ranks[k] = computed[k];
  return ranks;
}

}  // namespace

std::int64_t matrixRank(std::vector<std::vector<std::int64_t>> rows, FieldSpec field) {
  return field.isRationals() ? rankRationals(rows) : rankModP(std::move(rows), field.characteristic());
}

std::vector<std::int64_t> reducedHomologyRanks(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.isVoid()) return {0};
  return ranksFromFacets(complex.facets(), field, complex.dimension());
}

std::vector<std::int64_t> reducedHomologyFromNonfaces(VertexSet groundSet, const std::vector<VertexSet>& nonfaces,
                                                      FieldSpec field) {
  const int m = cardinality(groundSet);
  std::vector<VertexSet> minimal = minimalSets(nonfaces);
  for (VertexSet v : minimal) {
    if (v == 0 || !isSubset(v, groundSet)) throw InvalidArgument("nonfaces must be nonempty subsets of the ground set");
  }
  if (static_cast<int>(minimal.size()) >= m) {
    std::vector<VertexSet> facets;
    for (VertexSet t : minimalTransversals(minimal)) facets.push_back(groundSet & ~t);
    return ranksFromFacets(std::move(facets), field, m - 1);
  }
  std::vector<VertexSet> dualFacets;
  for (VertexSet v : minimal) dualFacets.push_back(groundSet & ~v);
  // No nonfaces: Δ is the full simplex and the dual is void.
  std::vector<std::int64_t> dual = ranksFromFacets(maximalSets(std::move(dualFacets)), field, m - 1);
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(m + 1), 0);
  for (int i = -1; i < m; ++i) ranks[static_cast<std::size_t>(i + 1)] = homologyRank(dual, m - i - 3);
  return ranks;
}

std::int64_t homologyRank(const std::vector<std::int64_t>& ranks, int d) {
  if (d < -1 || d + 1 >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(d + 1)];
}

}  // namespace ideallab

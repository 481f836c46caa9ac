#include "ideallab/takayama.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ideallab/errors.hpp"

namespace ideallab {

VertexSet DegreeVector::negativeSupport() const {
  VertexSet g = 0;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (entries[j] < 0) g |= singleton(static_cast<int>(j));
  }
  return g;
}

int DegreeVector::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

namespace {

void requireProperNonzero(const MonomialIdeal& ideal) {
  if (ideal.isZero() || ideal.isUnit()) {
    throw InvalidArgument("depth and regularity require a proper nonzero ideal");
  }
}

// For each generator b, the coordinates j outside G_a with b_j > a_j. A face
// F ⊇ G_a avoids I R_F iff its complement meets every one of these sets.
// Returns nullopt when some set is empty (x^a already lies in I R_{[n]}).
std::optional<std::vector<VertexSet>> violationSets(const MonomialIdeal& ideal, const std::vector<int>& a,
                                                    VertexSet negatives) {
  std::vector<VertexSet> sets;
  sets.reserve(ideal.size());
  const std::size_t n = ideal.numVars();
  for (const Monomial& b : ideal.generators()) {
    VertexSet v = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] > a[j]) v |= singleton(static_cast<int>(j));
    }
    v &= ~negatives;
    if (v == 0) return std::nullopt;
    sets.push_back(v);
  }
  return minimalSets(std::move(sets));
}

std::vector<VertexSet> facetsFromViolations(const std::vector<VertexSet>& violations, VertexSet free) {
  std::vector<VertexSet> facets;
  for (VertexSet t : minimalTransversals(violations)) facets.push_back(free & ~t);
  return facets;
}

class DegreeComplexScan {
 public:
  DegreeComplexScan(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits, BoxOptions box)
      : ideal_(ideal), field_(field) {
    requireProperNonzero(ideal);
    const std::size_t n = ideal.numVars();
    if (static_cast<int>(n) > limits.maxVars || n > 64) {
      throw CapExceeded("ideal has " + std::to_string(n) + " variables, cap is " + std::to_string(limits.maxVars));
    }
    std::vector<int> d = ideal.maxExponents();
    std::uint64_t size = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] > limits.maxExponent) throw CapExceeded("generator exponent exceeds the per-variable cap");
      int top = std::max(d[j], 1) - 1 + box.extraPositive;
      std::vector<int> values;
      if (box.includeMinusTwo) values.push_back(-2);
      for (int v = -1; v <= top; ++v) values.push_back(v);
      size *= values.size();
      if (size > limits.maxBox) throw CapExceeded("degree box exceeds IDEAL_LAB_MAX_BOX");
      axes_.push_back(std::move(values));
    }
  }

  InvariantReport run() {
    const std::size_t n = ideal_.numVars();
    const VertexSet everything = fullSet(static_cast<int>(n));
    std::vector<std::size_t> idx(n, 0);
    std::vector<int> a(n);
    bool haveWitness = false;
    InvariantReport report;
    report.field = field_;
    report.engine = "oracle";
    while (true) {
      for (std::size_t j = 0; j < n; ++j) a[j] = axes_[j][idx[j]];
      visit(a, everything, haveWitness, report);
      std::size_t j = n;
      bool advanced = false;
      while (j > 0) {
        --j;
        if (++idx[j] < axes_[j].size()) {
          advanced = true;
          break;
        }
        idx[j] = 0;
      }
      if (!advanced) break;
    }
    if (!haveWitness) throw AssertionFailure("no nonvanishing local cohomology found for a proper ideal");
    return report;
  }

 private:
  void visit(const std::vector<int>& a, VertexSet everything, bool& haveWitness, InvariantReport& report) {
    VertexSet negatives = 0;
    int total = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] < 0) negatives |= singleton(static_cast<int>(j));
      total += a[j];
    }
    auto violations = violationSets(ideal_, a, negatives);
    if (!violations) return;  // void complex
    const VertexSet free = everything & ~negatives;
    VertexSet covered = 0;
    for (VertexSet v : *violations) covered |= v;
    if (covered != free) return;  // a cone: acyclic

    std::vector<VertexSet> key;
    key.reserve(violations->size() + 1);
    key.push_back(negatives);
    key.insert(key.end(), violations->begin(), violations->end());
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      // Δ_a is the complex on `free` whose minimal nonfaces are the violation sets.
      it = memo_.emplace(std::move(key), reducedHomologyFromNonfaces(free, *violations, field_)).first;
    }
    const auto& ranks = it->second;
    const int g = cardinality(negatives);
    for (int i = 0; i <= static_cast<int>(a.size()); ++i) {
      if (homologyRank(ranks, i - 1) == 0) continue;
      int depthValue = g + i;
      int regValue = total + g + i;
      if (!haveWitness || depthValue < report.depth) {
        report.depth = depthValue;
        report.depthWitness = InvariantWitness{DegreeVector{a}, i, depthValue};
      }
      if (!haveWitness || regValue > report.reg) {
        report.reg = regValue;
        report.regWitness = InvariantWitness{DegreeVector{a}, i, regValue};
      }
      haveWitness = true;
    }
  }

  const MonomialIdeal& ideal_;
  FieldSpec field_;
  std::vector<std::vector<int>> axes_;
  std::map<std::vector<VertexSet>, std::vector<std::int64_t>> memo_;
};

}  // namespace

SimplicialComplex degreeComplex(const MonomialIdeal& ideal, const DegreeVector& a) {
  requireProperNonzero(ideal);
  const std::size_t n = ideal.numVars();
  if (a.entries.size() != n) throw InvalidArgument("degree vector length does not match the variable count");
  if (n > 64) throw CapExceeded("degree complexes support at most 64 variables");
  const VertexSet negatives = a.negativeSupport();
  auto violations = violationSets(ideal, a.entries, negatives);
  if (!violations) return SimplicialComplex::voidComplex(static_cast<int>(n));
  const VertexSet free = fullSet(static_cast<int>(n)) & ~negatives;
  return SimplicialComplex::fromFacets(static_cast<int>(n), facetsFromViolations(*violations, free));
}

InvariantReport oracleInvariants(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits, BoxOptions box) {
  return DegreeComplexScan(ideal, field, limits, box).run();
}

OracleResult depthOracle(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits, BoxOptions box) {
  InvariantReport r = oracleInvariants(ideal, field, limits, box);
  return {r.depth, *r.depthWitness};
}

OracleResult regOracle(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits, BoxOptions box) {
  InvariantReport r = oracleInvariants(ideal, field, limits, box);
  return {r.reg, *r.regWitness};
}

}  // namespace ideallab

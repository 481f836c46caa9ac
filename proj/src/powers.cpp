#include "ideallab/powers.hpp"

#include <algorithm>
#include <limits>

#include "ideallab/errors.hpp"
#include "ideallab/takayama.hpp"

namespace ideallab {

namespace {

void requirePositive(int value, const char* what) {
  if (value < 1) throw InvalidArgument(std::string(what) + " must be at least 1");
}

}  // namespace

std::vector<PowersRow> powersTable(const MonomialIdeal& ideal, int maxT, bool withClosure, FieldSpec field,
                                   const Limits& limits) {
  requirePositive(maxT, "maximum exponent");
  std::vector<PowersRow> rows;
  for (int t = 1; t <= maxT; ++t) {
    MonomialIdeal p = power(ideal, t);
    InvariantReport r = oracleInvariants(p, field, limits);
    PowersRow row{t, r.depth, r.reg, std::nullopt, std::nullopt};
    if (withClosure) {
      InvariantReport c = oracleInvariants(integralClosure(p, limits), field, limits);
      row.depthClosure = c.depth;
      row.regClosure = c.reg;
    }
    rows.push_back(row);
  }
  return rows;
}

bool isMonotone(const std::vector<PowersRow>& rows) {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const PowersRow& a = rows[k - 1];
    const PowersRow& b = rows[k];
    if (b.depthQ > a.depthQ || b.regQ < a.regQ) return false;
    if (a.depthClosure && b.depthClosure && *b.depthClosure > *a.depthClosure) return false;
    if (a.regClosure && b.regClosure && *b.regClosure < *a.regClosure) return false;
  }
  return true;
}

bool LeafColonReport::allHold() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const LeafColonStep& s) { return s.powerIdentity && s.closureIdentity; });
}

LeafColonReport goodLeafColonCheck(const Hypergraph& h, int maxT, const Limits& limits) {
  requirePositive(maxT, "maximum exponent");
  h.requireAntichain();
  auto leaf = goodLeaf(h);
  if (!leaf) throw InvalidArgument("hypergraph has no good leaf");
  const MonomialIdeal ideal = edgeIdeal(h);
  const auto n = static_cast<std::size_t>(h.vertexCount());
  std::vector<int> exps(n, 0);
  forEachElement(h.edges()[*leaf], [&](int v) { exps[static_cast<std::size_t>(v)] = 1; });

  LeafColonReport report;
  report.leafEdge = *leaf;
  report.leafMonomial = Monomial(std::move(exps));
  MonomialIdeal current = ideal;
  MonomialIdeal currentClosure = integralClosure(current, limits);
  for (int t = 1; t < maxT; ++t) {
    MonomialIdeal next = power(ideal, t + 1);
    MonomialIdeal nextClosure = integralClosure(next, limits);
    report.steps.push_back({t, colon(next, report.leafMonomial) == current,
                            colon(nextClosure, report.leafMonomial) == currentClosure});
    current = std::move(next);
    currentClosure = std::move(nextClosure);
  }
  return report;
}

std::vector<AddedVariableRow> addedVariablePowers(const MonomialIdeal& ideal, int maxS, FieldSpec field,
                                                  const Limits& limits) {
  requirePositive(maxS, "maximum exponent");
  const std::size_t n = ideal.numVars();
  const MonomialIdeal extended = sumWithMonomial(extendRing(ideal, 1), Monomial::variable(n + 1, n));
  std::vector<AddedVariableRow> rows;
  int minDepth = std::numeric_limits<int>::max();
  int maxShiftedReg = std::numeric_limits<int>::min();
  for (int s = 1; s <= maxS; ++s) {
    InvariantReport base = oracleInvariants(power(ideal, s), field, limits);
    minDepth = std::min(minDepth, base.depth);
    maxShiftedReg = std::max(maxShiftedReg, base.reg - s);
    InvariantReport lifted = oracleInvariants(power(extended, s), field, limits);
    rows.push_back({s, lifted.depth, minDepth, lifted.reg - s, maxShiftedReg});
  }
  return rows;
}

bool AssChainReport::holds() const {
  return std::all_of(included.begin(), included.end(), [](bool b) { return b; });
}

AssChainReport assChainCheck(const MonomialIdeal& ideal, int maxS, const Limits& limits) {
  requirePositive(maxS, "maximum exponent");
  const std::size_t n = ideal.numVars();
  const MonomialIdeal extended = sumWithMonomial(extendRing(ideal, 1), Monomial::variable(n + 1, n));
  AssChainReport report;
  for (int t = 1; t <= maxS; ++t) report.ass.push_back(associatedPrimes(power(extended, t), limits));
  for (std::size_t t = 1; t < report.ass.size(); ++t) {
    const auto& small = report.ass[t - 1];
    const auto& big = report.ass[t];
    report.included.push_back(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
  return report;
}

}  // namespace ideallab

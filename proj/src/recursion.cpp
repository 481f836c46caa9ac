#include "ideallab/recursion.hpp"

#include <algorithm>
#include <unordered_map>

#include "ideallab/errors.hpp"

namespace ideallab {

std::string ruleName(RecursionRule rule) {
  switch (rule) {
    case RecursionRule::Base: return "BASE";
    case RecursionRule::DepthColon: return "DEPTH-DHS";
    case RecursionRule::DepthTie: return "DEPTH-TIE";
    case RecursionRule::DepthAmbiguousOracle: return "DEPTH-AMBIG-ORACLE";
    case RecursionRule::RegColon: return "REG-COLON";
    case RecursionRule::RegSum: return "REG-SUM";
    case RecursionRule::RegTieOracle: return "REG-TIE-ORACLE";
  }
  return "UNKNOWN";
}

int splittingVariable(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.numVars();
  std::vector<int> weight(n, 0);
  VertexSet eligible = 0;
  for (const Monomial& g : ideal.generators()) {
    for (std::size_t j = 0; j < n; ++j) weight[j] += g[j];
    if (g.degree() >= 2) eligible |= g.support();
  }
  int best = -1;
  forEachElement(eligible, [&](int j) {
    if (best < 0 || weight[static_cast<std::size_t>(j)] > weight[static_cast<std::size_t>(best)]) best = j;
  });
  return best;
}

namespace {

enum class Invariant { Depth, Reg };

class SplitEngine {
 public:
  SplitEngine(Invariant which, FieldSpec field, const Limits& limits) : which_(which), field_(field), limits_(limits) {}

  RecursiveResult run(const MonomialIdeal& ideal) {
    if (ideal.isZero() || ideal.isUnit()) {
      throw InvalidArgument("depth and regularity require a proper nonzero ideal");
    }
    if (static_cast<int>(ideal.numVars()) > limits_.maxVars) {
      throw CapExceeded("ideal has more variables than IDEAL_LAB_MAX_VARS");
    }
    RecursiveResult result;
    int root = solve(ideal);
    result.value = nodes_[static_cast<std::size_t>(root)].value;
    result.trace.nodes = std::move(nodes_);
    result.trace.root = root;
    return result;
  }

 private:
  int solve(const MonomialIdeal& ideal) {
    std::string key = field_.name() + '|' + ideal.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    TraceNode node;
    node.idealKey = ideal.key();
    const int x = splittingVariable(ideal);
    if (x < 0) {
      node.rule = RecursionRule::Base;
      node.value = which_ == Invariant::Depth
                       ? static_cast<int>(ideal.numVars()) - static_cast<int>(ideal.size())
                       : 0;
      return store(std::move(key), std::move(node));
    }

    const Monomial var = Monomial::variable(ideal.numVars(), static_cast<std::size_t>(x));
    node.variable = x;
    node.colonChild = solve(colon(ideal, var));
    node.sumChild = solve(sumWithMonomial(ideal, var));
    node.colonValue = nodes_[static_cast<std::size_t>(node.colonChild)].value;
    node.sumValue = nodes_[static_cast<std::size_t>(node.sumChild)].value;

    if (which_ == Invariant::Depth) {
      if (node.sumValue > node.colonValue) {
        node.rule = RecursionRule::DepthColon;
        node.value = node.colonValue;
      } else if (node.sumValue == node.colonValue) {
        node.rule = RecursionRule::DepthTie;
        node.value = node.colonValue;
      } else {
        OracleResult oracle = depthOracle(ideal, field_, limits_);
        if (oracle.value != node.colonValue && oracle.value != node.sumValue) {
          throw AssertionFailure("depth of " + ideal.key() + " is neither depth(I:x) nor depth(I,x)");
        }
        node.rule = RecursionRule::DepthAmbiguousOracle;
        node.value = oracle.value;
        node.oracleWitness = oracle.witness;
      }
    } else {
      if (node.colonValue > node.sumValue) {
        node.rule = RecursionRule::RegColon;
        node.value = node.colonValue + 1;
      } else if (node.colonValue < node.sumValue) {
        node.rule = RecursionRule::RegSum;
        node.value = node.sumValue;
      } else {
        OracleResult oracle = regOracle(ideal, field_, limits_);
        if (oracle.value != node.sumValue && oracle.value != node.sumValue + 1) {
          throw AssertionFailure("tie case of the regularity split violated at " + ideal.key());
        }
        node.rule = RecursionRule::RegTieOracle;
        node.value = oracle.value;
        node.oracleWitness = oracle.witness;
      }
    }
    return store(std::move(key), std::move(node));
  }

  int store(std::string key, TraceNode node) {
    nodes_.push_back(std::move(node));
    int index = static_cast<int>(nodes_.size()) - 1;
    memo_.emplace(std::move(key), index);
    return index;
  }

  Invariant which_;
  FieldSpec field_;
  const Limits& limits_;
  std::vector<TraceNode> nodes_;
  std::unordered_map<std::string, int> memo_;
};

}  // namespace

RecursiveResult depthRecursive(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits) {
  return SplitEngine(Invariant::Depth, field, limits).run(ideal);
}

RecursiveResult regRecursive(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits) {
  return SplitEngine(Invariant::Reg, field, limits).run(ideal);
}

InvariantReport recursiveInvariants(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits) {
  RecursiveResult depth = depthRecursive(ideal, field, limits);
  RecursiveResult reg = regRecursive(ideal, field, limits);
  InvariantReport report;
  report.depth = depth.value;
  report.reg = reg.value;
  report.field = field;
  report.engine = "recursive";
  report.depthWitness = depth.trace.nodes[static_cast<std::size_t>(depth.trace.root)].oracleWitness;
  report.regWitness = reg.trace.nodes[static_cast<std::size_t>(reg.trace.root)].oracleWitness;
  return report;
}

RegUpperBounds regUpperBounds(const MonomialIdeal& ideal, FieldSpec field, const Limits& limits) {
  RegUpperBounds bounds;
  bounds.htBound = lcmDegree(ideal) - height(ideal) + 1;
  int worst = 0;
  forEachElement(ideal.support(), [&](int j) {
    MonomialIdeal quotient = colon(ideal, Monomial::variable(ideal.numVars(), static_cast<std::size_t>(j)));
    // reg of the unit ideal, viewed as the free module R, is 0.
    int idealReg = quotient.isUnit() ? 0 : regRecursive(quotient, field, limits).value + 1;
    worst = std::max(worst, idealReg);
  });
  bounds.inductiveBound = worst + 1;
  return bounds;
}

}  // namespace ideallab

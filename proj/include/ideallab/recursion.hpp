#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideallab/monomial_ideal.hpp"
#include "ideallab/takayama.hpp"

namespace ideallab {

/// How a node of the splitting recursion obtained its value.
enum class RecursionRule {
  Base,                  // generated by variables
  DepthColon,            // depth(I,x) > depth(I:x): depth I = depth(I:x)
  DepthTie,              // depth(I,x) = depth(I:x)
  DepthAmbiguousOracle,  // depth(I,x) < depth(I:x): oracle decides
  RegColon,              // reg(I:x) > reg(I,x): reg I = reg(I:x) + 1
  RegSum,                // reg(I:x) < reg(I,x): reg I = reg(I,x)
  RegTieOracle,          // reg(I:x) = reg(I,x): oracle picks one of two values
};

std::string ruleName(RecursionRule rule);

/// One node of the recursion DAG. Quotient invariants throughout.
struct TraceNode {
  std::string idealKey;
  int variable = -1;  // -1 on base nodes
  RecursionRule rule = RecursionRule::Base;
  int value = 0;
  int colonValue = 0;  // invariant of R/(I:x)
  int sumValue = 0;    // invariant of R/(I,x)
  int colonChild = -1;
  int sumChild = -1;
  std::optional<InvariantWitness> oracleWitness;
};

/// Nodes are stored children-first; `root` indexes the input ideal. Shared
/// subideals appear once.
struct RecursionTrace {
  std::vector<TraceNode> nodes;
  int root = -1;
};

struct RecursiveResult {
  int value = 0;
  RecursionTrace trace;
};

/// Splitting variable: largest total exponent among variables dividing a
/// generator of degree >= 2, ties to the lowest index. -1 if I is generated
/// by variables.
int splittingVariable(const MonomialIdeal& ideal);

/// depth R/I by splitting on a variable, consulting the oracle only when
/// depth R/(I,x) < depth R/(I:x).
RecursiveResult depthRecursive(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                               const Limits& limits = Limits::fromEnvironment());

/// reg R/I by splitting on a variable, consulting the oracle only on ties.
/// Throws AssertionFailure if the oracle's answer on a tie is not in
/// {reg R/(I,x), reg R/(I,x) + 1}.
RecursiveResult regRecursive(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                             const Limits& limits = Limits::fromEnvironment());

/// Both invariants through the recursion, with oracle witnesses when the
/// root itself needed the oracle.
InvariantReport recursiveInvariants(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                                    const Limits& limits = Limits::fromEnvironment());

/// Upper bounds on reg I (ideal regularity, = reg R/I + 1):
/// htBound = deg lcm(I) - height(I) + 1, and
/// inductiveBound = 1 + max over support variables x of reg(I:x).
struct RegUpperBounds {
  int htBound = 0;
  int inductiveBound = 0;
};

RegUpperBounds regUpperBounds(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                              const Limits& limits = Limits::fromEnvironment());

}  // namespace ideallab

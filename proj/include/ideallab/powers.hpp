#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ideallab/hypergraph.hpp"
#include "ideallab/limits.hpp"
#include "ideallab/monomial_ideal.hpp"
#include "ideallab/simplicial_complex.hpp"

namespace ideallab {

/// Invariants of R/I^t and, optionally, of R/closure(I^t).
struct PowersRow {
  int t = 1;
  int depthQ = 0;
  int regQ = 0;
  std::optional<int> depthClosure;
  std::optional<int> regClosure;
};

/// Rows t = 1..maxT, all computed by the degree-complex oracle.
std::vector<PowersRow> powersTable(const MonomialIdeal& ideal, int maxT, bool withClosure,
                                   FieldSpec field = FieldSpec::rationals(),
                                   const Limits& limits = Limits::fromEnvironment());

/// t -> depth non-increasing and t -> reg non-decreasing (closure columns too).
bool isMonotone(const std::vector<PowersRow>& rows);

struct LeafColonStep {
  int t = 1;
  bool powerIdentity = false;    // I^{t+1} : f = I^t
  bool closureIdentity = false;  // closure(I^{t+1}) : f = closure(I^t)
};

struct LeafColonReport {
  std::size_t leafEdge = 0;
  Monomial leafMonomial;
  std::vector<LeafColonStep> steps;
  bool allHold() const;
};

/// Colon identities for the first good leaf of `h`, t = 1..maxT-1.
/// Throws InvalidArgument if `h` has no good leaf.
LeafColonReport goodLeafColonCheck(const Hypergraph& h, int maxT,
                                   const Limits& limits = Limits::fromEnvironment());

/// One exponent s of the added-variable identity. The ring S has one extra
/// trailing variable x. Left sides come from (I,x)^s in S, right sides from
/// the powers of I in R:
///   depth S/(I,x)^s     = min_{1<=t<=s} depth R/I^t
///   reg S/(I,x)^s - s   = max_{1<=t<=s} (reg R/I^t - t)
struct AddedVariableRow {
  int s = 1;
  int depthLhs = 0;
  int depthRhs = 0;
  int regLhs = 0;  // already shifted by -s
  int regRhs = 0;
  bool holds() const { return depthLhs == depthRhs && regLhs == regRhs; }
};

std::vector<AddedVariableRow> addedVariablePowers(const MonomialIdeal& ideal, int maxS,
                                                  FieldSpec field = FieldSpec::rationals(),
                                                  const Limits& limits = Limits::fromEnvironment());

struct AssChainReport {
  /// ass[t-1] = Ass((I,x)^t) for t = 1..s.
  std::vector<std::vector<PrimeSupport>> ass;
  /// included[t-1]: Ass((I,x)^t) ⊆ Ass((I,x)^{t+1}), t = 1..s-1.
  std::vector<bool> included;
  bool holds() const;
};

AssChainReport assChainCheck(const MonomialIdeal& ideal, int maxS,
                             const Limits& limits = Limits::fromEnvironment());

}  // namespace ideallab

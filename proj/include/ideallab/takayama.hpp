#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideallab/limits.hpp"
#include "ideallab/monomial_ideal.hpp"
#include "ideallab/simplicial_complex.hpp"

namespace ideallab {

/// A degree a in Z^n. G_a is the set of coordinates with a_j < 0.
struct DegreeVector {
  std::vector<int> entries;

  VertexSet negativeSupport() const;
  /// |a| = sum of the entries.
  int total() const;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
};

/// A pair (a, i) with H̃_{i-1}(Δ_a(I)) nonzero, and the value it contributes:
/// |G_a| + i for depth, |a| + |G_a| + i for regularity.
struct InvariantWitness {
  DegreeVector a;
  int i = 0;
  int value = 0;
  friend bool operator==(const InvariantWitness&, const InvariantWitness&) = default;
};

struct OracleResult {
  int value = 0;
  InvariantWitness witness;
};

/// Depth and regularity of R/I with the engine that produced them.
struct InvariantReport {
  int depth = 0;
  int reg = 0;
  FieldSpec field = FieldSpec::rationals();
  std::string engine;
  // Set by the oracle; the recursive engine reports rule traces instead.
  std::optional<InvariantWitness> depthWitness;
  std::optional<InvariantWitness> regWitness;
};

/// Enumeration box for the degree-complex scan. The default box is
/// a_j in {-1, 0, ..., max(d_j, 1) - 1}; the options enlarge it for the
/// stability check.
struct BoxOptions {
  int extraPositive = 0;
  bool includeMinusTwo = false;
};

/// The degree complex Δ_a(I) = { F \ G_a : G_a ⊆ F, x^a ∉ I R_F }, on the
/// vertex set {0..n-1}. Requires I proper and nonzero.
SimplicialComplex degreeComplex(const MonomialIdeal& ideal, const DegreeVector& a);

/// Depth and regularity of R/I by scanning degree complexes over the box.
/// Throws CapExceeded when the variable, exponent or box caps are exceeded.
InvariantReport oracleInvariants(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                                 const Limits& limits = Limits::fromEnvironment(), BoxOptions box = {});

OracleResult depthOracle(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                         const Limits& limits = Limits::fromEnvironment(), BoxOptions box = {});
OracleResult regOracle(const MonomialIdeal& ideal, FieldSpec field = FieldSpec::rationals(),
                       const Limits& limits = Limits::fromEnvironment(), BoxOptions box = {});

}  // namespace ideallab

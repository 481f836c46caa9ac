#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ideallab/bits.hpp"
#include "ideallab/limits.hpp"

namespace ideallab {

/// A monomial x^a over a fixed ordered list of n variables, stored as its
/// exponent vector. The all-zero vector is the unit monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t index, int power = 1);

  std::size_t numVars() const { return exps_.size(); }
  int operator[](std::size_t j) const { return exps_[j]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool isOne() const;
  bool isSquarefree() const;
  VertexSet support() const;

  /// Componentwise `*this <= other`.
  bool divides(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  /// Appends `count` variables with exponent zero.
  Monomial extended(std::size_t count) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Canonical generator order: ascending total degree, then descending
/// lexicographic order of exponent vectors (x1 > x2 > ...).
bool canonicalLess(const Monomial& a, const Monomial& b);

/// Monomial ideal in k[x_1..x_n] given by its minimal generators.
///
/// The generator list is always a divisibility antichain in canonical order,
/// so two ideals are equal iff their representations are equal. The zero
/// ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Minimalizes and sorts `gens`. Throws InvalidArgument on a length
  /// mismatch or a negative exponent.
  static MonomialIdeal normalize(std::vector<Monomial> gens, std::size_t n);
  static MonomialIdeal zero(std::size_t n) { return normalize({}, n); }
  static MonomialIdeal unit(std::size_t n) { return normalize({Monomial::one(n)}, n); }

  std::size_t numVars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool isZero() const { return gens_.empty(); }
  bool isUnit() const { return gens_.size() == 1 && gens_.front().isOne(); }
  bool isProper() const { return !isUnit(); }
  bool isSquarefree() const;
  /// Every generator is a single variable.
  bool isGeneratedByVariables() const;

  bool contains(const Monomial& m) const;
  /// Containment of ideals.
  bool contains(const MonomialIdeal& other) const;

  int maxGeneratorDegree() const;
  /// d_j = largest exponent of x_j among the minimal generators.
  std::vector<int> maxExponents() const;
  /// Variables dividing some generator.
  VertexSet support() const;

  /// Stable textual key, usable for memoization.
  std::string key() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Monomial prime ideal generated by the variables in `vars`.
struct PrimeSupport {
  VertexSet vars = 0;
  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

struct PolarizedIdeal {
  MonomialIdeal ideal;
  int addedVarCount = 0;
  /// origin[k] = index of the original variable that slot k polarizes.
  std::vector<int> origin;
};

/// I : f, generated by lcm(g, f) / f over the generators g of I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
/// (I, f)
MonomialIdeal sumWithMonomial(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^t for t >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int t);

/// The same ideal in a ring with `count` fresh trailing variables.
MonomialIdeal extendRing(const MonomialIdeal& ideal, std::size_t count);

/// Minimal primes, i.e. minimal transversals of the generator supports.
std::vector<PrimeSupport> minimalPrimes(const MonomialIdeal& ideal);
int height(const MonomialIdeal& ideal);
int dimension(const MonomialIdeal& ideal);
/// Total degree of the lcm of the minimal generators.
int lcmDegree(const MonomialIdeal& ideal);

PolarizedIdeal polarize(const MonomialIdeal& ideal);

/// Integral closure: monomials whose exponents lie in the Newton polyhedron.
MonomialIdeal integralClosure(const MonomialIdeal& ideal,
                              const Limits& limits = Limits::fromEnvironment());

/// Primes of the form I : w for a monomial w outside I.
std::vector<PrimeSupport> associatedPrimes(const MonomialIdeal& ideal,
                                           const Limits& limits = Limits::fromEnvironment());

}  // namespace ideallab

#include "ideallab/newton.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "ideallab/errors.hpp"

namespace ideallab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Dense tableau for  min art  s.t.  B^T l + s = point,  1^T l + art = 1.
// Columns: l_0..l_{g-1}, s_0..s_{n-1}, art, rhs.
class PhaseOneTableau {
 public:
  PhaseOneTableau(const std::vector<Monomial>& gens, const std::vector<int>& point)
      : g_(gens.size()), n_(point.size()), cols_(g_ + n_ + 1), rows_(n_ + 1, std::vector<Rational>(cols_ + 1)),
        basis_(n_ + 1), cost_(cols_ + 1) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < g_; ++i) rows_[j][i] = gens[i][j];
      rows_[j][g_ + j] = 1;
      rows_[j][cols_] = point[j];
      basis_[j] = g_ + j;
    }
    for (std::size_t i = 0; i < g_; ++i) rows_[n_][i] = 1;
    rows_[n_][g_ + n_] = 1;
    rows_[n_][cols_] = 1;
    basis_[n_] = g_ + n_;
    // Reduced costs of the phase-one objective after pricing out `art`.
    for (std::size_t c = 0; c <= cols_; ++c) cost_[c] = -rows_[n_][c];
    cost_[g_ + n_] = 0;
  }

  // Returns the optimal artificial value (Bland's rule, so no cycling).
  Rational solve() {
    while (true) {
      std::size_t entering = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (cost_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (entering == cols_) break;
      std::size_t leaving = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][entering] <= 0) continue;
        Rational ratio = rows_[r][cols_] / rows_[r][entering];
        if (leaving == rows_.size() || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
          best = ratio;
          leaving = r;
        }
      }
      // The objective is bounded below by zero, so a pivot row always exists.
      if (leaving == rows_.size()) throw AssertionFailure("phase-one simplex reported unboundedness");
      pivot(leaving, entering);
    }
    return -cost_[cols_];
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (Rational& v : rows_[r]) v /= p;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k == r || rows_[k][c] == 0) continue;
      Rational factor = rows_[k][c];
      for (std::size_t t = 0; t <= cols_; ++t) rows_[k][t] -= factor * rows_[r][t];
    }
    if (cost_[c] != 0) {
      Rational factor = cost_[c];
      for (std::size_t t = 0; t <= cols_; ++t) cost_[t] -= factor * rows_[r][t];
    }
    basis_[r] = c;
  }

  std::size_t g_, n_, cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

}  // namespace

bool inNewtonPolyhedron(const std::vector<Monomial>& gens, const std::vector<int>& point) {
  if (gens.empty()) return false;
  for (const Monomial& g : gens) {
    if (g.numVars() != point.size()) throw InvalidArgument("point length does not match the variable count");
  }
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (point[j] < 0) return false;
    int lowest = gens.front()[j];
    for (const Monomial& g : gens) lowest = std::min(lowest, g[j]);
    if (point[j] < lowest) return false;
  }
  for (const Monomial& g : gens) {
    if (g.divides(Monomial(point))) return true;
  }
  PhaseOneTableau tableau(gens, point);
  return tableau.solve() == 0;
}

}  // namespace ideallab

#include "ideallab/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ideallab/errors.hpp"
#include "ideallab/newton.hpp"

namespace ideallab {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw InvalidArgument("monomial exponents must be nonnegative");
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t index, int power) {
  if (index >= n) throw InvalidArgument("variable index out of range");
  std::vector<int> e(n, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::isOne() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::isSquarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

VertexSet Monomial::support() const {
  VertexSet s = 0;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > 0) s |= singleton(static_cast<int>(j));
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > other.exps_[j]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(exps_[j], other.exps_[j]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::min(exps_[j], other.exps_[j]);
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = exps_[j] + other.exps_[j];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw InvalidArgument("monomial quotient is not exact");
  std::vector<int> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = exps_[j] - divisor.exps_[j];
  return Monomial(std::move(e));
}

Monomial Monomial::extended(std::size_t count) const {
  std::vector<int> e = exps_;
  e.resize(e.size() + count, 0);
  return Monomial(std::move(e));
}

bool canonicalLess(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal MonomialIdeal::normalize(std::vector<Monomial> gens, std::size_t n) {
  if (n == 0) throw InvalidArgument("a monomial ideal needs at least one variable");
  for (const Monomial& g : gens) {
    if (g.numVars() != n) throw InvalidArgument("generator length does not match the variable count");
  }
  std::sort(gens.begin(), gens.end(), canonicalLess);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal ideal;
  ideal.n_ = n;
  // Divisors precede their multiples in canonical order.
  for (Monomial& g : gens) {
    bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) ideal.gens_.push_back(std::move(g));
  }
  return ideal;
}

bool MonomialIdeal::isSquarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.isSquarefree(); });
}

bool MonomialIdeal::isGeneratedByVariables() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.numVars() != n_) throw InvalidArgument("monomial length does not match the variable count");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

int MonomialIdeal::maxGeneratorDegree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::vector<int> MonomialIdeal::maxExponents() const {
  std::vector<int> d(n_, 0);
  for (const Monomial& g : gens_) {
    for (std::size_t j = 0; j < n_; ++j) d[j] = std::max(d[j], g[j]);
  }
  return d;
}

VertexSet MonomialIdeal::support() const {
  VertexSet s = 0;
  for (const Monomial& g : gens_) s |= g.support();
  return s;
}

std::string MonomialIdeal::key() const {
  std::ostringstream out;
  out << n_ << ':';
  for (const Monomial& g : gens_) {
    for (int e : g.exponents()) out << e << ',';
    out << ';';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void requireSameRing(const MonomialIdeal& ideal, const Monomial& f) {
  if (f.numVars() != ideal.numVars()) {
    throw InvalidArgument("monomial length does not match the variable count");
  }
}

void requireProperNonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.isZero() || ideal.isUnit()) {
    throw InvalidArgument(std::string(what) + " requires a proper nonzero ideal");
  }
}

}  // namespace

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  requireSameRing(ideal, f);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.lcm(f) / f);
  return MonomialIdeal::normalize(std::move(gens), ideal.numVars());
}

MonomialIdeal sumWithMonomial(const MonomialIdeal& ideal, const Monomial& f) {
  requireSameRing(ideal, f);
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(f);
  return MonomialIdeal::normalize(std::move(gens), ideal.numVars());
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.numVars() != b.numVars()) throw InvalidArgument("ideals live in different rings");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::normalize(std::move(gens), a.numVars());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.numVars() != b.numVars()) throw InvalidArgument("ideals live in different rings");
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators()) {
    for (const Monomial& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal::normalize(std::move(gens), a.numVars());
}

MonomialIdeal power(const MonomialIdeal& ideal, int t) {
  if (t < 1) throw InvalidArgument("ideal powers need an exponent t >= 1");
  MonomialIdeal result = ideal;
  for (int k = 1; k < t; ++k) result = product(result, ideal);
  return result;
}

MonomialIdeal extendRing(const MonomialIdeal& ideal, std::size_t count) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) gens.push_back(g.extended(count));
  return MonomialIdeal::normalize(std::move(gens), ideal.numVars() + count);
}

std::vector<PrimeSupport> minimalPrimes(const MonomialIdeal& ideal) {
  requireProperNonzero(ideal, "minimalPrimes");
  std::vector<VertexSet> supports;
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  std::vector<PrimeSupport> primes;
  for (VertexSet t : minimalTransversals(supports)) primes.push_back({t});
  std::sort(primes.begin(), primes.end());
  return primes;
}

int height(const MonomialIdeal& ideal) {
  int best = static_cast<int>(ideal.numVars());
  for (const PrimeSupport& p : minimalPrimes(ideal)) best = std::min(best, cardinality(p.vars));
  return best;
}

int dimension(const MonomialIdeal& ideal) { return static_cast<int>(ideal.numVars()) - height(ideal); }

int lcmDegree(const MonomialIdeal& ideal) {
  if (ideal.isZero()) throw InvalidArgument("lcmDegree requires a nonzero ideal");
  std::vector<int> d = ideal.maxExponents();
  return std::accumulate(d.begin(), d.end(), 0);
}

PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  requireProperNonzero(ideal, "polarize");
  const std::size_t n = ideal.numVars();
  std::vector<int> d = ideal.maxExponents();
  // A variable absent from every generator keeps one slot so the ring does
  // not shrink.
  std::vector<int> offset(n + 1, 0);
  PolarizedIdeal result;
  for (std::size_t j = 0; j < n; ++j) {
    int slots = std::max(d[j], 1);
    offset[j + 1] = offset[j] + slots;
    for (int k = 0; k < slots; ++k) result.origin.push_back(static_cast<int>(j));
  }
  const auto total = static_cast<std::size_t>(offset[n]);
  if (total > 64) throw CapExceeded("polarization needs more than 64 variables");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(total, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (int k = 0; k < g[j]; ++k) e[static_cast<std::size_t>(offset[j] + k)] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  result.ideal = MonomialIdeal::normalize(std::move(gens), total);
  result.addedVarCount = static_cast<int>(total - n);
  return result;
}

// ---------------------------------------------------------------------------
// Box enumerations

namespace {

std::uint64_t boxSize(const std::vector<int>& upper) {
  std::uint64_t size = 1;
  for (int u : upper) {
    size *= static_cast<std::uint64_t>(u + 1);
    if (size > (std::uint64_t{1} << 62)) break;
  }
  return size;
}

// Calls f(point) for every point of prod [0, upper_j], odometer order.
template <typename F>
void forEachBoxPoint(const std::vector<int>& upper, F&& f) {
  std::vector<int> point(upper.size(), 0);
  while (true) {
    f(point);
    std::size_t j = point.size();
    while (j > 0) {
      --j;
      if (point[j] < upper[j]) {
        ++point[j];
        break;
      }
      point[j] = 0;
      if (j == 0) return;
    }
    if (point.empty()) return;
  }
}

}  // namespace

MonomialIdeal integralClosure(const MonomialIdeal& ideal, const Limits& limits) {
  requireProperNonzero(ideal, "integralClosure");
  std::vector<int> upper = ideal.maxExponents();
  if (boxSize(upper) > limits.maxBox) throw CapExceeded("integral closure box exceeds IDEAL_LAB_MAX_BOX");

  std::vector<std::vector<int>> points;
  forEachBoxPoint(upper, [&](const std::vector<int>& p) { points.push_back(p); });
  std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });

  // Graded order: a point not divisible by an earlier closure generator is a
  // new minimal generator iff it lies in the Newton polyhedron.
  std::vector<Monomial> found;
  for (const auto& p : points) {
    Monomial m(p);
    bool covered = std::any_of(found.begin(), found.end(), [&](const Monomial& g) { return g.divides(m); });
    if (covered) continue;
    if (ideal.contains(m) || inNewtonPolyhedron(ideal.generators(), p)) found.push_back(std::move(m));
  }
  return MonomialIdeal::normalize(std::move(found), ideal.numVars());
}

std::vector<PrimeSupport> associatedPrimes(const MonomialIdeal& ideal, const Limits& limits) {
  requireProperNonzero(ideal, "associatedPrimes");
  const std::size_t n = ideal.numVars();
  const VertexSet supp = ideal.support();
  if (cardinality(supp) > limits.maxVars) throw CapExceeded("associatedPrimes: too many variables");

  // P_S is associated iff the maximal ideal of k[x_S] is associated to the
  // localization I_S (exponents outside S zeroed). Its socle witnesses w'
  // satisfy w'_j = b_j - 1 for some generator b, and w = (w' on S, d_j off S)
  // is then a witness for I itself inside the box w_j <= d_j.
  std::vector<PrimeSupport> result;
  for (VertexSet s = supp;; s = (s - 1) & supp) {
    if (s != 0) {
      std::vector<Monomial> local;
      bool cover = true;
      for (const Monomial& g : ideal.generators()) {
        if ((g.support() & s) == 0) {
          cover = false;
          break;
        }
        std::vector<int> e(n, 0);
        forEachElement(s, [&](int j) { e[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(j)]; });
        local.emplace_back(std::move(e));
      }
      if (cover) {
        MonomialIdeal localized = MonomialIdeal::normalize(std::move(local), n);
        std::vector<int> vars = elements(s);
        std::vector<std::vector<int>> candidates(vars.size());
        std::uint64_t combos = 1;
        bool everyVariableUsed = true;
        for (std::size_t k = 0; k < vars.size(); ++k) {
          auto j = static_cast<std::size_t>(vars[k]);
          for (const Monomial& g : localized.generators()) {
            if (g[j] >= 1) candidates[k].push_back(g[j] - 1);
          }
          std::sort(candidates[k].begin(), candidates[k].end());
          candidates[k].erase(std::unique(candidates[k].begin(), candidates[k].end()), candidates[k].end());
          // A variable absent from I_S is a nonzerodivisor on k[x_S]/I_S.
          if (candidates[k].empty()) everyVariableUsed = false;
          combos *= std::max<std::size_t>(candidates[k].size(), 1);
          if (combos > limits.maxBox) throw CapExceeded("associatedPrimes witness search exceeds IDEAL_LAB_MAX_BOX");
        }
        std::vector<std::size_t> idx(vars.size(), 0);
        std::vector<int> w(n, 0);
        bool found = false;
        while (everyVariableUsed && !found) {
          for (std::size_t k = 0; k < vars.size(); ++k) w[static_cast<std::size_t>(vars[k])] = candidates[k][idx[k]];
          Monomial wm(w);
          if (!localized.contains(wm)) {
            bool socle = true;
            for (int j : vars) {
              std::vector<int> up = w;
              ++up[static_cast<std::size_t>(j)];
              if (!localized.contains(Monomial(std::move(up)))) {
                socle = false;
                break;
              }
            }
            found = socle;
          }
          std::size_t k = vars.size();
          bool advanced = false;
          while (k > 0) {
            --k;
            if (++idx[k] < candidates[k].size()) {
              advanced = true;
              break;
            }
            idx[k] = 0;
          }
          if (!advanced) break;
        }
        if (found) result.push_back({s});
      }
    }
    if (s == 0) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace ideallab

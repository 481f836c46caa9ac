#pragma once

#include <vector>

#include "ideallab/monomial_ideal.hpp"

namespace ideallab {

/// Exact test of `point` in conv(exponents of gens) + R^n_{>=0}.
///
/// Solves the feasibility problem sum(l_i * b_i) <= point, sum(l_i) = 1,
/// l >= 0 with a phase-one simplex over arbitrary-precision rationals.
bool inNewtonPolyhedron(const std::vector<Monomial>& gens, const std::vector<int>& point);

}  // namespace ideallab

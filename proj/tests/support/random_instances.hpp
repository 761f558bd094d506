#pragma once

#include <random>

#include "indca/model.hpp"
#include "indca/types.hpp"

namespace indca::testing {

using Rng = std::mt19937_64;

// Random symmetric matrix with entries in [-1, 1], resampled until it is
// genuinely indefinite (lambda_min < -0.05 < 0.05 < lambda_max).
Matrix random_indefinite_symmetric(int n, Rng& rng);

// Random bounded polytope {Ax >= b}: coordinate lower bounds, one capping
// sum constraint and a few extra random cuts, all strictly satisfied by a
// known interior point. m stays within m_max.
struct BoundedRegion {
  Matrix A;
  Vector b;
  Vector interior;
};
BoundedRegion random_bounded_region(int n, int m_max, Rng& rng);

// Full IQP instance over a bounded region.
IqpProblem random_bounded_iqp(int n, int m_max, Rng& rng);

// Random feasible (possibly unbounded) inequality system for QP oracle tests.
struct Region {
  Matrix A;
  Vector b;
  Vector interior;
};
Region random_region(int n, int m, Rng& rng);

Vector random_vector(int n, Rng& rng, double scale = 1.0);

// Random symmetric positive definite matrix with smallest eigenvalue >= 0.3.
Matrix random_spd(int n, Rng& rng);

}  // namespace indca::testing

#pragma once

#include "indca/types.hpp"

namespace indca {

enum class SpectralMethod { Jacobi, Gershgorin };

// Extreme eigenvalues of a symmetric matrix. For Jacobi both values are
// eigenvalues up to the iteration tolerance; for Gershgorin they are outer
// bounds (lambda_min <= true lambda_1, lambda_max >= true lambda_n).
struct SpectralBounds {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  SpectralMethod method = SpectralMethod::Jacobi;
};

// Full eigenvalue set by cyclic Jacobi rotations, sorted ascending.
// Sweeps until the off-diagonal Frobenius norm drops below tol times the
// Frobenius norm of M; throws NoConvergence after 30 sweeps.
std::vector<double> jacobi_eigenvalues(const Matrix& M, double tol = 1e-12);

SpectralBounds jacobi_extreme_eigenvalues(const Matrix& M, double tol = 1e-12);

SpectralBounds gershgorin_bounds(const Matrix& M);

}  // namespace indca

#pragma once

// Independent oracles for cross-checking the solver path: brute force only,
// sharing no code with the library internals under test.

#include <functional>
#include <optional>

#include "indca/types.hpp"

namespace indca::testing {

// Global minimizer of  1/2 x^T H x + g^T x  over {Ax >= b} by enumerating all
// 2^m candidate active sets and solving each equality-constrained system.
// Returns nullopt when no candidate is feasible (empty region). Intended for
// m <= ~12.
std::optional<Vector> brute_force_qp(const Matrix& H, const Vector& g,
                                     const Matrix& A, const Vector& b);

// Eigenvalues of a symmetric matrix with n <= 3 from the characteristic
// polynomial, sorted ascending.
std::vector<double> charpoly_eigenvalues(const Matrix& M);

// Minimum distance between two convex sets given by metric projections, via
// alternating projections from a starting point.
double alternating_projection_distance(
    const std::function<Vector(const Vector&)>& project_first,
    const std::function<Vector(const Vector&)>& project_second,
    const Vector& start, int iterations = 200);

}  // namespace indca::testing

#pragma once

#include <optional>

#include "indca/model.hpp"
#include "indca/types.hpp"

namespace indca {

// Strictly convex QP  min 1/2 x^T H x + g^T x  over {Ax >= b}.
struct QpSubproblem {
  Matrix H;  // symmetric positive definite
  Vector g;
  Matrix A;
  Vector b;
};

struct QpSolution {
  Vector x_star;
  IndexSet active;      // rows with |A_i x - b_i| <= 1e-9
  Vector multipliers;   // length m, >= 0, zero off the active set
  double kkt_residual;  // ||H x + g - A^T lambda||
};

// Primal active-set method with a Cholesky factorization of H. The starting
// point comes from warm_start if provided (projected to feasibility via the
// phase-1 LP when needed); the optional warm working set is sanitized to an
// independent subset of the rows active at the start.
//
// Deterministic tie-breaking: the blocking constraint with the smallest step
// ratio enters (lowest index on ties); among negative multipliers the lowest
// index leaves.
QpSolution solve_qp(const QpSubproblem& sub,
                    const std::optional<Vector>& warm_start = std::nullopt,
                    const IndexSet& warm_working_set = {});

// Subproblem for the proximal variant at iterate x_k:
//   H = Q + eta*I,  g = q - eta*x_k - gamma*(x_k - x_km1).
QpSubproblem build_indca2_subproblem(const IqpProblem& p,
                                     const DcDecomposition& dc,
                                     const Vector& x_k, const Vector& x_km1,
                                     double gamma);

}  // namespace indca

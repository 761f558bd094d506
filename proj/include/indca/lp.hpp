#pragma once

#include <optional>

#include "indca/types.hpp"

namespace indca {

// Dense linear programming over free variables:
//
//   min  c^T x   s.t.  Aeq x = beq,  Aineq x >= bineq.
//
// Two-phase primal simplex on the standard-form split x = x+ - x-, with
// Bland's anti-cycling rule. Feasibility kernel behind problem validation,
// pseudo-face enumeration and the cone probes; all callers are desk scale.

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vector x;             // populated when status == Optimal
  double objective = 0.0;
};

LpResult lp_solve(const Vector& c, const Matrix& Aeq, const Vector& beq,
                  const Matrix& Aineq, const Vector& bineq);

// Feasibility of {x | Aeq x = beq, Aineq x >= bineq}; on success the witness
// satisfies every constraint to within 1e-9.
std::optional<Vector> lp_feasible(const Matrix& Aeq, const Vector& beq,
                                  const Matrix& Aineq, const Vector& bineq);

}  // namespace indca

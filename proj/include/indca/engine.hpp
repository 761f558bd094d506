#pragma once

#include "indca/certify.hpp"
#include "indca/model.hpp"
#include "indca/trace.hpp"
#include "indca/types.hpp"

namespace indca {

struct SolveResult {
  SolveTrace trace;
  SolveStatus status = SolveStatus::MaxIterReached;
  Vector final_point;      // the returned iterate x^k of the stopping test
  double final_objective = 0.0;
  KktCertificate kkt;
  bool projected_start = false;  // x0 was outside C and got projected
};

// One step of the projection form:
//   x_next = P_C( (1 + gamma/eta) x_k - (gamma/eta) x_km1 - (Q x_k + q)/eta ).
Vector indca1_step(const IqpProblem& p, const DcDecomposition& dc,
                   const Vector& x_k, const Vector& x_km1, double gamma,
                   const IndexSet& warm_working_set = {});

// One step of the proximal form: the unique minimizer of the strongly convex
// subproblem built at (x_k, x_km1).
Vector indca2_step(const IqpProblem& p, const DcDecomposition& dc,
                   const Vector& x_k, const Vector& x_km1, double gamma,
                   const IndexSet& warm_working_set = {});

// Full inertial DCA loop with x^-1 = x^0. Stops when both the step norm and
// the inertial-term norm drop to Tol, at max_iter, or at the divergence cap.
SolveResult run(const IqpProblem& p, const DcDecomposition& dc,
                const InertialConfig& cfg, const Vector& x0, Algorithm algo);

struct DiagnosticsReport {
  // max over k of E_{k+1} - E_k + alpha1*||x^k - x^{k-1}||^2, where
  // E_k = f(x^k) + alpha*||x^k - x^{k-1}||^2; nonpositive up to roundoff
  // when the energy decrease holds.
  double max_decrease_violation = 0.0;
  bool decrease_ok = false;

  double weighted_step_square_sum = 0.0;  // alpha1 * sum_k step_k^2
  double sum_bound = 0.0;                 // f(x^0) - min_k f(x^k)
  bool sum_ok = false;

  double last_step_norm = 0.0;
};

DiagnosticsReport diagnostics_check(const SolveTrace& trace,
                                    const InertialConfig& cfg,
                                    const DcDecomposition& dc);

}  // namespace indca

#pragma once

#include <cstdint>
#include <optional>

#include "indca/geometry.hpp"
#include "indca/model.hpp"
#include "indca/trace.hpp"
#include "indca/types.hpp"

namespace indca {

// KKT system of the IQP at x:
//   Qx + q - A^T lambda = 0,  Ax >= b,  lambda >= 0,  lambda^T(Ax - b) = 0.
// Multipliers are recovered by nonnegative least squares over the rows active
// at x, which makes complementarity exact by construction.
struct KktCertificate {
  Vector x;
  Vector multipliers;
  double stationarity_residual = 0.0;
  double feasibility_violation = 0.0;
  double complementarity_violation = 0.0;
  bool is_kkt = false;  // all three residuals <= 1e-6
};

KktCertificate kkt_certificate(const IqpProblem& p, const Vector& x,
                               double act_tol = 1e-9, double kkt_tol = 1e-6);

struct StrongConvexityReport {
  bool passes = false;
  double worst_slack = 0.0;  // min over pairs of the inequality slack
  Vector witness_x;          // pair attaining the worst slack
  Vector witness_y;
};

// Sampled check of  f2(y) >= f2(x) + <grad f2(x), y-x> + rho/2 ||y-x||^2
// for f2(x) = 1/2 x^T M x, over `samples` random pairs.
StrongConvexityReport verify_strong_convexity(const Matrix& f2_matrix,
                                              double rho, int samples,
                                              std::uint64_t seed);

enum class QcVerdict { SatisfiedVacuously, Satisfied, Violated };

struct QcFaceReport {
  IndexSet alpha;
  QcVerdict verdict = QcVerdict::SatisfiedVacuously;
  std::optional<Vector> witness;  // violation direction, infinity-norm 1
};

struct QcReport {
  std::vector<QcFaceReport> per_face;
  bool holds = false;
};

// Qualification check over every nonempty pseudo-face: an unbounded face
// violates the condition when some nonzero recession direction v satisfies
// Qv in pos{A_i^T, i in alpha} (the negated normal cone of the pseudo-face).
// Decided by 2n coordinate-pinning LP probes per face.
QcReport qc_check(const IqpProblem& p, int enumeration_cap = 20);

// Core of the per-face probe, exposed for direct testing on raw cones:
// a nonzero v with eq v = 0, ineq v >= 0 and Qv in pos{columns of gens},
// if one exists.
std::optional<Vector> qc_violation_witness(const Matrix& eq,
                                           const Matrix& ineq, const Matrix& Q,
                                           const Matrix& gens);

// A connected piece-union of the KKT set, supplied by the caller as a list of
// polyhedra {x | Aeq x = beq, Aineq x >= bineq}.
struct Polyhedron {
  Matrix Aeq;
  Vector beq;
  Matrix Aineq;
  Vector bineq;
};

struct ComponentDescription {
  std::vector<Polyhedron> pieces;
};

Vector project_onto_polyhedron(const Polyhedron& piece, const Vector& u);

double distance_to_component(const ComponentDescription& comp, const Vector& x);

struct ComponentConvergenceReport {
  std::vector<std::vector<double>> tail_distances;  // per component
  int best_component = -1;  // minimal final distance
  double final_distance = 0.0;
  bool distance_converged = false;  // final distance <= threshold
  double objective_spread = 0.0;    // over the last up-to-10 iterates
  bool objective_stable = false;    // spread <= 1e-8
};

ComponentConvergenceReport component_convergence_check(
    const SolveTrace& trace,
    const std::vector<ComponentDescription>& components,
    double distance_threshold = 1e-6, int tail_length = 10);

// Residual of the inclusion that defines a projection step:
//   gamma(x_k - x_km1) - eta(x_next - x_k) - (Q x_k + q)  in  N_C(x_next).
double inclusion_residual_projection(const IqpProblem& p, const Vector& x_next,
                                     const Vector& x_k, const Vector& x_km1,
                                     double eta, double gamma,
                                     double act_tol = 1e-9);

// Residual of the proximal-step inclusion, which evaluates the gradient at
// x_next instead of x_k.
double inclusion_residual_proximal(const IqpProblem& p, const Vector& x_next,
                                   const Vector& x_k, const Vector& x_km1,
                                   double eta, double gamma,
                                   double act_tol = 1e-9);

}  // namespace indca

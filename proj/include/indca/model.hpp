#pragma once

#include <optional>

#include "indca/spectral.hpp"
#include "indca/types.hpp"

namespace indca {

// Indefinite quadratic program  min 1/2 x^T Q x + q^T x  over C = {Ax >= b}.
// Immutable after construction; build through build_problem, which symmetrizes
// Q when needed and rejects an empty constraint set.
struct IqpProblem {
  int n = 0;
  int m = 0;
  Matrix Q;
  Vector q;
  Matrix A;
  Vector b;
  bool symmetrized = false;  // set when the Q input was not symmetric
};

IqpProblem build_problem(int n, int m, const Matrix& Q, const Vector& q,
                         const Matrix& A, const Vector& b);

double objective(const IqpProblem& p, const Vector& x);

// Two ways of writing Q = Q1 - Q2 with both parts positive definite:
//   ProjectionA:  Q1 = eta*I,      Q2 = eta*I - Q,  eta > lambda_max(Q)
//   ProximalB:    Q1 = Q + eta*I,  Q2 = eta*I,      eta > -lambda_min(Q)
enum class Variant { ProjectionA, ProximalB };

struct DcDecomposition {
  Variant variant = Variant::ProjectionA;
  double eta = 0.0;
  double rho = 0.0;  // ProjectionA: eta - lambda_max; ProximalB: eta + lambda_min
  double lambda_min_Q = 0.0;
  double lambda_max_Q = 0.0;
};

struct EtaPolicy {
  static EtaPolicy automatic() { return EtaPolicy{}; }
  static EtaPolicy explicit_value(double eta) { return EtaPolicy{eta}; }
  std::optional<double> value;  // empty: spectral bound + 1
};

DcDecomposition make_decomposition(const IqpProblem& p, Variant variant,
                                   const EtaPolicy& eta_policy,
                                   SpectralMethod method = SpectralMethod::Jacobi);

Matrix q1_matrix(const IqpProblem& p, const DcDecomposition& dc);
Matrix q2_matrix(const IqpProblem& p, const DcDecomposition& dc);

// Inertial weight, either absolute or as a fraction theta of the admissible
// half-open range [0, rho/2); theta must lie in [0, 1).
struct GammaSpec {
  static GammaSpec absolute(double v) { return GammaSpec{v, false}; }
  static GammaSpec fraction(double theta) { return GammaSpec{theta, true}; }
  double value = 0.9;
  bool is_fraction = true;
};

struct InertialConfig {
  double gamma = 0.0;  // in [0, rho/2)
  double tol = 1e-8;
  int max_iter = 100000;
  double divergence_norm_cap = 1e12;
  double alpha = 0.0;   // (rho - gamma)/2
  double alpha1 = 0.0;  // alpha - gamma/2, positive for admissible gamma
};

// Throws InvalidGamma when the resolved gamma falls outside [0, rho/2).
InertialConfig make_config(const DcDecomposition& dc,
                           const GammaSpec& gamma = GammaSpec{},
                           double tol = 1e-8, int max_iter = 100000,
                           double divergence_norm_cap = 1e12);

}  // namespace indca

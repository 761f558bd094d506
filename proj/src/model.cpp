#include "indca/model.hpp"

#include <algorithm>
#include <cmath>

#include "indca/errors.hpp"
#include "indca/lp.hpp"

namespace indca {

IqpProblem build_problem(int n, int m, const Matrix& Q, const Vector& q,
                         const Matrix& A, const Vector& b) {
  if (n <= 0 || m <= 0) {
    throw DimensionMismatch("n and m must be positive");
  }
  if (Q.rows() != n || Q.cols() != n || q.size() != n || A.rows() != m ||
      A.cols() != n || b.size() != m) {
    throw DimensionMismatch("Q must be n x n, q length n, A m x n, b length m");
  }

  IqpProblem p;
  p.n = n;
  p.m = m;
  p.q = q;
  p.A = A;
  p.b = b;

  // 1/2 x^T Q x only sees the symmetric part, so asymmetric input is
  // symmetrized and flagged instead of rejected.
  const double skew = (Q - Q.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12) {
    p.Q = 0.5 * (Q + Q.transpose());
    p.symmetrized = true;
  } else {
    p.Q = Q;
  }

  if (!lp_feasible(Matrix(0, n), Vector(0), A, b)) {
    throw InfeasibleConstraintSet("constraint set {Ax >= b} is empty");
  }
  return p;
}

double objective(const IqpProblem& p, const Vector& x) {
  if (x.size() != p.n) {
    throw DimensionMismatch("objective: x has wrong length");
  }
  return 0.5 * x.dot(p.Q * x) + p.q.dot(x);
}

DcDecomposition make_decomposition(const IqpProblem& p, Variant variant,
                                   const EtaPolicy& eta_policy,
                                   SpectralMethod method) {
  const SpectralBounds sb = method == SpectralMethod::Jacobi
                                ? jacobi_extreme_eigenvalues(p.Q)
                                : gershgorin_bounds(p.Q);
  // eta must clear the spectral bound and stay positive (for a definite Q the
  // spectral bound can be negative).
  const double bound = std::max(
      0.0, variant == Variant::ProjectionA ? sb.lambda_max : -sb.lambda_min);

  double eta;
  if (eta_policy.value) {
    eta = *eta_policy.value;
    if (!(eta > bound)) throw EtaTooSmall(eta, bound);
  } else {
    eta = bound + 1.0;
  }

  DcDecomposition dc;
  dc.variant = variant;
  dc.eta = eta;
  dc.lambda_min_Q = sb.lambda_min;
  dc.lambda_max_Q = sb.lambda_max;
  dc.rho = variant == Variant::ProjectionA ? eta - sb.lambda_max
                                           : eta + sb.lambda_min;
  return dc;
}

Matrix q1_matrix(const IqpProblem& p, const DcDecomposition& dc) {
  const Matrix id = Matrix::Identity(p.n, p.n);
  return dc.variant == Variant::ProjectionA ? Matrix(dc.eta * id)
                                            : Matrix(p.Q + dc.eta * id);
}

Matrix q2_matrix(const IqpProblem& p, const DcDecomposition& dc) {
  const Matrix id = Matrix::Identity(p.n, p.n);
  return dc.variant == Variant::ProjectionA ? Matrix(dc.eta * id - p.Q)
                                            : Matrix(dc.eta * id);
}

InertialConfig make_config(const DcDecomposition& dc, const GammaSpec& gamma,
                           double tol, int max_iter,
                           double divergence_norm_cap) {
  if (tol < 0.0) throw Error("tol must be nonnegative");
  if (max_iter <= 0) throw Error("max_iter must be positive");
  if (divergence_norm_cap <= 0.0) throw Error("divergence cap must be positive");

  double g;
  if (gamma.is_fraction) {
    if (gamma.value < 0.0 || gamma.value >= 1.0) {
      throw InvalidGamma("gamma fraction must lie in [0, 1)");
    }
    g = gamma.value * dc.rho / 2.0;
  } else {
    g = gamma.value;
  }
  if (!(g >= 0.0 && g < dc.rho / 2.0)) {
    throw InvalidGamma("gamma must lie in [0, rho/2) = [0, " +
                       std::to_string(dc.rho / 2.0) + ")");
  }

  InertialConfig cfg;
  cfg.gamma = g;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.divergence_norm_cap = divergence_norm_cap;
  cfg.alpha = (dc.rho - g) / 2.0;
  cfg.alpha1 = cfg.alpha - g / 2.0;
  return cfg;
}

}  // namespace indca

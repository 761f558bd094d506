#include "indca/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "indca/errors.hpp"
#include "indca/nnls.hpp"
#include "indca/qp_solver.hpp"

namespace indca {

namespace {

// Columns {-A_i^T, i in alpha}, the normal-cone generators.
Matrix normal_generator_columns(const IqpProblem& p, const IndexSet& alpha) {
  Matrix G(p.n, static_cast<Eigen::Index>(alpha.size()));
  for (size_t k = 0; k < alpha.size(); ++k) {
    G.col(static_cast<Eigen::Index>(k)) = -p.A.row(alpha[k]).transpose();
  }
  return G;
}

}  // namespace

KktCertificate kkt_certificate(const IqpProblem& p, const Vector& x,
                               double act_tol, double kkt_tol) {
  if (x.size() != p.n) throw DimensionMismatch("kkt_certificate: x length");

  KktCertificate cert;
  cert.x = x;
  const Vector residual = p.A * x - p.b;
  cert.feasibility_violation = std::max(0.0, -residual.minCoeff());

  IndexSet alpha;
  for (int i = 0; i < p.m; ++i) {
    if (std::abs(residual(i)) <= act_tol) alpha.push_back(i);
  }

  // Qx + q = sum lambda_i A_i^T with lambda >= 0 supported on active rows.
  Matrix G(p.n, static_cast<Eigen::Index>(alpha.size()));
  for (size_t k = 0; k < alpha.size(); ++k) {
    G.col(static_cast<Eigen::Index>(k)) = p.A.row(alpha[k]).transpose();
  }
  const Vector grad = p.Q * x + p.q;
  const NnlsResult fit = nnls(G, grad);

  cert.multipliers = Vector::Zero(p.m);
  for (size_t k = 0; k < alpha.size(); ++k) {
    cert.multipliers(alpha[k]) = fit.coeffs(static_cast<Eigen::Index>(k));
  }
  cert.stationarity_residual = fit.residual;
  cert.complementarity_violation =
      p.m > 0 ? cert.multipliers.cwiseProduct(residual).cwiseAbs().maxCoeff()
              : 0.0;
  cert.is_kkt = cert.stationarity_residual <= kkt_tol &&
                cert.feasibility_violation <= kkt_tol &&
                cert.complementarity_violation <= kkt_tol;
  return cert;
}

StrongConvexityReport verify_strong_convexity(const Matrix& f2_matrix,
                                              double rho, int samples,
                                              std::uint64_t seed) {
  const int n = static_cast<int>(f2_matrix.rows());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const auto f2 = [&](const Vector& v) { return 0.5 * v.dot(f2_matrix * v); };

  StrongConvexityReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Vector x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x(i) = gauss(rng);
      y(i) = gauss(rng);
    }
    const Vector grad = f2_matrix * x;
    const double slack = f2(y) - f2(x) - grad.dot(y - x) -
                         0.5 * rho * (y - x).squaredNorm();
    if (slack < report.worst_slack) {
      report.worst_slack = slack;
      report.witness_x = x;
      report.witness_y = y;
    }
  }
  report.passes = report.worst_slack >= -1e-9;
  return report;
}

std::optional<Vector> qc_violation_witness(const Matrix& eq,
                                           const Matrix& ineq, const Matrix& Q,
                                           const Matrix& gens) {
  const int n = static_cast<int>(Q.rows());
  const int s = static_cast<int>(gens.cols());

  // Variables (v, mu): eq v = 0, Qv - gens*mu = 0, v_j = +-1,
  // ineq v >= 0, mu >= 0, v in [-1,1]^n.
  const int r_ineq = static_cast<int>(ineq.rows());
  Matrix Aineq(r_ineq + s + 2 * n, n + s);
  Aineq.setZero();
  Aineq.topLeftCorner(r_ineq, n) = ineq;
  Aineq.block(r_ineq, n, s, s) = Matrix::Identity(s, s);
  Aineq.block(r_ineq + s, 0, n, n) = Matrix::Identity(n, n);
  Aineq.block(r_ineq + s + n, 0, n, n) = -Matrix::Identity(n, n);
  Vector bineq = Vector::Zero(r_ineq + s + 2 * n);
  bineq.tail(2 * n).setConstant(-1.0);

  const int r_eq = static_cast<int>(eq.rows());
  for (int j = 0; j < n; ++j) {
    for (const double sign : {1.0, -1.0}) {
      Matrix Aeq(r_eq + n + 1, n + s);
      Aeq.setZero();
      Aeq.topLeftCorner(r_eq, n) = eq;
      Aeq.block(r_eq, 0, n, n) = Q;
      Aeq.block(r_eq, n, n, s) = -gens;
      Aeq(r_eq + n, j) = 1.0;
      Vector beq = Vector::Zero(r_eq + n + 1);
      beq(r_eq + n) = sign;
      if (auto witness = lp_feasible(Aeq, beq, Aineq, bineq)) {
        return Vector(witness->head(n));
      }
    }
  }
  return std::nullopt;
}

QcReport qc_check(const IqpProblem& p, int enumeration_cap) {
  QcReport report;
  report.holds = true;
  for (const PseudoFaceDescriptor& face :
       enumerate_pseudo_faces(p, enumeration_cap)) {
    QcFaceReport fr;
    fr.alpha = face.alpha;
    const RecessionCone rc = recession_cone(p, face.alpha);
    if (rc.is_trivial) {
      fr.verdict = QcVerdict::SatisfiedVacuously;
    } else {
      Matrix gens(p.n, static_cast<Eigen::Index>(face.alpha.size()));
      for (size_t k = 0; k < face.alpha.size(); ++k) {
        gens.col(static_cast<Eigen::Index>(k)) =
            p.A.row(face.alpha[k]).transpose();
      }
      if (auto v = qc_violation_witness(rc.eq, rc.ineq, p.Q, gens)) {
        fr.verdict = QcVerdict::Violated;
        fr.witness = *v;
        report.holds = false;
      } else {
        fr.verdict = QcVerdict::Satisfied;
      }
    }
    report.per_face.push_back(std::move(fr));
  }
  return report;
}

Vector project_onto_polyhedron(const Polyhedron& piece, const Vector& u) {
  const int n = static_cast<int>(u.size());
  const int r_eq = static_cast<int>(piece.Aeq.rows());
  const int r_in = static_cast<int>(piece.Aineq.rows());

  // Equalities as paired inequalities; the solver's working set keeps an
  // independent subset, so opposing rows coexist.
  QpSubproblem sub;
  sub.H = Matrix::Identity(n, n);
  sub.g = -u;
  sub.A = Matrix(2 * r_eq + r_in, n);
  sub.b = Vector(2 * r_eq + r_in);
  if (r_eq > 0) {
    sub.A.topRows(r_eq) = piece.Aeq;
    sub.b.head(r_eq) = piece.beq;
    sub.A.middleRows(r_eq, r_eq) = -piece.Aeq;
    sub.b.segment(r_eq, r_eq) = -piece.beq;
  }
  if (r_in > 0) {
    sub.A.bottomRows(r_in) = piece.Aineq;
    sub.b.tail(r_in) = piece.bineq;
  }
  return solve_qp(sub, u).x_star;
}

double distance_to_component(const ComponentDescription& comp,
                             const Vector& x) {
  if (comp.pieces.empty()) throw NoComponents("component has no pieces");
  double best = std::numeric_limits<double>::infinity();
  for (const Polyhedron& piece : comp.pieces) {
    best = std::min(best, (x - project_onto_polyhedron(piece, x)).norm());
  }
  return best;
}

ComponentConvergenceReport component_convergence_check(
    const SolveTrace& trace,
    const std::vector<ComponentDescription>& components,
    double distance_threshold, int tail_length) {
  if (components.empty()) throw NoComponents("no components supplied");
  if (trace.empty()) throw TraceTooShort("empty trace");

  const int len = static_cast<int>(trace.size());
  const int tail = std::min(len, tail_length);

  ComponentConvergenceReport report;
  double best_final = std::numeric_limits<double>::infinity();
  for (size_t c = 0; c < components.size(); ++c) {
    std::vector<double> dists;
    for (int k = len - tail; k < len; ++k) {
      dists.push_back(distance_to_component(components[c], trace[k].x));
    }
    if (dists.back() < best_final) {
      best_final = dists.back();
      report.best_component = static_cast<int>(c);
    }
    report.tail_distances.push_back(std::move(dists));
  }
  report.final_distance = best_final;
  report.distance_converged = best_final <= distance_threshold;

  double f_lo = std::numeric_limits<double>::infinity();
  double f_hi = -std::numeric_limits<double>::infinity();
  for (int k = len - tail; k < len; ++k) {
    f_lo = std::min(f_lo, trace[k].f_val);
    f_hi = std::max(f_hi, trace[k].f_val);
  }
  report.objective_spread = f_hi - f_lo;
  report.objective_stable = report.objective_spread <= 1e-8;
  return report;
}

namespace {

double inclusion_residual_impl(const IqpProblem& p, const Vector& x_next,
                               const Vector& gradient_point, const Vector& x_k,
                               const Vector& x_km1, double eta, double gamma,
                               double act_tol) {
  const Vector r = gamma * (x_k - x_km1) - eta * (x_next - x_k) -
                   (p.Q * gradient_point + p.q);
  IndexSet alpha;
  const Vector residual = p.A * x_next - p.b;
  for (int i = 0; i < p.m; ++i) {
    if (std::abs(residual(i)) <= act_tol) alpha.push_back(i);
  }
  return conic_membership_residual(normal_generator_columns(p, alpha), r);
}

}  // namespace

double inclusion_residual_projection(const IqpProblem& p, const Vector& x_next,
                                     const Vector& x_k, const Vector& x_km1,
                                     double eta, double gamma, double act_tol) {
  return inclusion_residual_impl(p, x_next, x_k, x_k, x_km1, eta, gamma,
                                 act_tol);
}

double inclusion_residual_proximal(const IqpProblem& p, const Vector& x_next,
                                   const Vector& x_k, const Vector& x_km1,
                                   double eta, double gamma, double act_tol) {
  return inclusion_residual_impl(p, x_next, x_next, x_k, x_km1, eta, gamma,
                                 act_tol);
}

}  // namespace indca

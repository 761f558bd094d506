#include "indca/qp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include "indca/errors.hpp"
#include "indca/lp.hpp"

namespace indca {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kMultTol = 1e-10;

struct EqSolve {
  Vector x;
  Vector lambda;  // one per working-set row
};

// Minimizer of the objective subject to A_W x = b_W, by the Schur complement
// S = A_W H^-1 A_W^T of the KKT system.
EqSolve solve_on_working_set(const Eigen::LLT<Matrix>& llt, const Vector& g,
                             const Matrix& A, const Vector& b,
                             const IndexSet& W) {
  EqSolve out;
  if (W.empty()) {
    out.x = llt.solve(-g);
    out.lambda = Vector(0);
    return out;
  }
  const int w = static_cast<int>(W.size());
  Matrix At(A.cols(), w);
  Vector bw(w);
  for (int k = 0; k < w; ++k) {
    At.col(k) = A.row(W[k]).transpose();
    bw(k) = b(W[k]);
  }
  const Matrix HinvAt = llt.solve(At);
  const Matrix S = At.transpose() * HinvAt;
  const Vector rhs = bw + At.transpose() * llt.solve(g);
  out.lambda = S.ldlt().solve(rhs);
  out.x = llt.solve(At * out.lambda - g);
  return out;
}

IndexSet active_rows(const Matrix& A, const Vector& b, const Vector& x,
                     double tol) {
  IndexSet act;
  for (int i = 0; i < A.rows(); ++i) {
    if (std::abs(A.row(i).dot(x) - b(i)) <= tol) act.push_back(i);
  }
  return act;
}

// Greedy independent subset of the candidate rows, in index order.
IndexSet independent_subset(const Matrix& A, const IndexSet& candidates) {
  IndexSet out;
  if (candidates.empty()) return out;
  Matrix rows(0, A.cols());
  for (int i : candidates) {
    Matrix trial(rows.rows() + 1, A.cols());
    trial.topRows(rows.rows()) = rows;
    trial.row(rows.rows()) = A.row(i);
    Eigen::ColPivHouseholderQR<Matrix> qr(trial.transpose());
    qr.setThreshold(1e-10);
    if (qr.rank() == trial.rows()) {
      rows = std::move(trial);
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

QpSolution solve_qp(const QpSubproblem& sub,
                    const std::optional<Vector>& warm_start,
                    const IndexSet& warm_working_set) {
  const int n = static_cast<int>(sub.H.rows());
  const int m = static_cast<int>(sub.A.rows());
  if (sub.H.cols() != n || sub.g.size() != n || sub.A.cols() != n ||
      sub.b.size() != m) {
    throw DimensionMismatch("solve_qp: inconsistent dimensions");
  }

  Eigen::LLT<Matrix> llt(sub.H);
  if (llt.info() != Eigen::Success) {
    throw Error("solve_qp: H is not positive definite");
  }

  Vector x;
  if (warm_start && warm_start->size() == n &&
      (m == 0 || (sub.A * *warm_start - sub.b).minCoeff() >= -kFeasTol)) {
    x = *warm_start;
  } else {
    auto witness = lp_feasible(Matrix(0, n), Vector(0), sub.A, sub.b);
    if (!witness) throw InfeasibleRegion("solve_qp: {Ax >= b} is empty");
    x = *witness;
  }

  IndexSet W;
  {
    IndexSet candidates;
    const IndexSet act = active_rows(sub.A, sub.b, x, kFeasTol);
    for (int i : warm_working_set) {
      if (std::binary_search(act.begin(), act.end(), i)) candidates.push_back(i);
    }
    W = independent_subset(sub.A, candidates);
  }

  const int change_cap = 10 * (m + n);
  for (int changes = 0; changes <= change_cap; ++changes) {
    const EqSolve eq = solve_on_working_set(llt, sub.g, sub.A, sub.b, W);
    const Vector step = eq.x - x;

    if (step.norm() <= 1e-11 * (1.0 + x.norm())) {
      // At the working-set optimum; check multiplier signs.
      int drop = -1;
      for (size_t k = 0; k < W.size(); ++k) {
        if (eq.lambda(static_cast<Eigen::Index>(k)) < -kMultTol) {
          drop = static_cast<int>(k);
          break;  // W is sorted: lowest index first
        }
      }
      if (drop < 0) {
        QpSolution sol;
        sol.x_star = eq.x;
        sol.active = active_rows(sub.A, sub.b, eq.x, kFeasTol);
        sol.multipliers = Vector::Zero(m);
        for (size_t k = 0; k < W.size(); ++k) {
          sol.multipliers(W[k]) =
              std::max(0.0, eq.lambda(static_cast<Eigen::Index>(k)));
        }
        sol.kkt_residual =
            (sub.H * sol.x_star + sub.g - sub.A.transpose() * sol.multipliers)
                .norm();
        return sol;
      }
      W.erase(W.begin() + drop);
      continue;
    }

    // Ratio test toward the equality-constrained optimum.
    double alpha = 1.0;
    int blocker = -1;
    for (int i = 0; i < m; ++i) {
      if (std::binary_search(W.begin(), W.end(), i)) continue;
      const double ai_step = sub.A.row(i).dot(step);
      if (ai_step < -1e-12) {
        const double slack = sub.A.row(i).dot(x) - sub.b(i);
        const double ratio = std::max(0.0, slack) / (-ai_step);
        if (ratio < alpha - 1e-14) {
          alpha = ratio;
          blocker = i;
        }
      }
    }

    if (blocker < 0) {
      x = eq.x;  // full step, no blocking row
    } else {
      x += alpha * step;
      W.insert(std::upper_bound(W.begin(), W.end(), blocker), blocker);
    }
  }
  throw CycleGuardExceeded("solve_qp: working-set changes exceeded 10(m+n)");
}

QpSubproblem build_indca2_subproblem(const IqpProblem& p,
                                     const DcDecomposition& dc,
                                     const Vector& x_k, const Vector& x_km1,
                                     double gamma) {
  if (dc.variant != Variant::ProximalB) {
    throw VariantMismatch("build_indca2_subproblem requires ProximalB");
  }
  if (x_k.size() != p.n || x_km1.size() != p.n) {
    throw DimensionMismatch("build_indca2_subproblem: iterate length");
  }
  QpSubproblem sub;
  sub.H = p.Q + dc.eta * Matrix::Identity(p.n, p.n);
  sub.g = p.q - dc.eta * x_k - gamma * (x_k - x_km1);
  sub.A = p.A;
  sub.b = p.b;
  return sub;
}

}  // namespace indca

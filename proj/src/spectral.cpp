#include "indca/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "indca/errors.hpp"

namespace indca {

namespace {

void require_symmetric(const Matrix& M) {
  if (M.rows() != M.cols()) {
    throw NonSymmetric("matrix is not square");
  }
  const double skew = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12) {
    throw NonSymmetric("matrix is not symmetric (max asymmetry " +
                       std::to_string(skew) + ")");
  }
}

double off_diagonal_norm(const Matrix& A) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (i != j) s += A(i, j) * A(i, j);
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const Matrix& M, double tol) {
  require_symmetric(M);
  const Eigen::Index n = M.rows();
  Matrix A = M;
  const double scale = A.norm();
  const int max_sweeps = 30;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(A) <= tol * scale || scale == 0.0) {
      std::vector<double> ev(n);
      for (Eigen::Index i = 0; i < n; ++i) ev[i] = A(i, i);
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = A(p, p);
        const double aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = A(r, p);
          const double arq = A(r, q);
          A(r, p) = A(p, r) = arp - s * (arq + tau * arp);
          A(r, q) = A(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }
  throw NoConvergence("Jacobi sweeps did not converge within 30 sweeps");
}

SpectralBounds jacobi_extreme_eigenvalues(const Matrix& M, double tol) {
  const std::vector<double> ev = jacobi_eigenvalues(M, tol);
  return SpectralBounds{ev.front(), ev.back(), SpectralMethod::Jacobi};
}

SpectralBounds gershgorin_bounds(const Matrix& M) {
  require_symmetric(M);
  const Eigen::Index n = M.rows();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) radius += std::abs(M(i, j));
    }
    lo = std::min(lo, M(i, i) - radius);
    hi = std::max(hi, M(i, i) + radius);
  }
  return SpectralBounds{lo, hi, SpectralMethod::Gershgorin};
}

}  // namespace indca

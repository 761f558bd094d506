#include "indca/nnls.hpp"

#include <cmath>
#include <limits>

#include "indca/errors.hpp"

namespace indca {

namespace {

Vector solve_passive_ls(const Matrix& G, const Vector& y,
                        const std::vector<int>& passive) {
  Matrix Gp(G.rows(), static_cast<Eigen::Index>(passive.size()));
  for (size_t k = 0; k < passive.size(); ++k) {
    Gp.col(static_cast<Eigen::Index>(k)) = G.col(passive[k]);
  }
  return Gp.completeOrthogonalDecomposition().solve(y);
}

}  // namespace

NnlsResult nnls(const Matrix& G, const Vector& y) {
  const int s = static_cast<int>(G.cols());
  NnlsResult res;
  res.coeffs = Vector::Zero(s);
  if (s == 0) {
    res.residual = y.norm();
    return res;
  }

  const double tol = 1e-12 * std::max(1.0, G.cwiseAbs().maxCoeff()) *
                     std::max(1.0, y.cwiseAbs().maxCoeff());
  std::vector<bool> in_passive(s, false);
  std::vector<int> passive;
  Vector mu = Vector::Zero(s);

  const int cap = 3 * s + 30;
  for (int outer = 0; outer < cap; ++outer) {
    const Vector w = G.transpose() * (y - G * mu);
    int enter = -1;
    double best = tol;
    for (int j = 0; j < s; ++j) {
      if (!in_passive[j] && w(j) > best) {
        best = w(j);
        enter = j;
      }
    }
    if (enter < 0) break;
    in_passive[enter] = true;
    passive.push_back(enter);

    for (int inner = 0; inner < cap; ++inner) {
      const Vector z = solve_passive_ls(G, y, passive);
      double min_z = std::numeric_limits<double>::infinity();
      for (Eigen::Index k = 0; k < z.size(); ++k) min_z = std::min(min_z, z(k));
      if (min_z > 0.0) {
        mu.setZero();
        for (size_t k = 0; k < passive.size(); ++k) mu(passive[k]) = z(k);
        break;
      }
      // Step back to the boundary and drop every variable that hits zero.
      double theta = 1.0;
      for (size_t k = 0; k < passive.size(); ++k) {
        if (z(k) <= 0.0) {
          const double mk = mu(passive[k]);
          const double denom = mk - z(k);
          if (denom > 0.0) theta = std::min(theta, mk / denom);
        }
      }
      for (size_t k = 0; k < passive.size(); ++k) {
        mu(passive[k]) += theta * (z(k) - mu(passive[k]));
      }
      std::vector<int> next;
      for (int j : passive) {
        if (mu(j) > tol) {
          next.push_back(j);
        } else {
          mu(j) = 0.0;
          in_passive[j] = false;
        }
      }
      passive = std::move(next);
      if (passive.empty()) break;
    }
  }

  res.coeffs = mu;
  res.residual = (G * mu - y).norm();
  return res;
}

double conic_membership_residual(const Matrix& G, const Vector& y) {
  return nnls(G, y).residual;
}

}  // namespace indca

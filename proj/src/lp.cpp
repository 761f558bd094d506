#include "indca/lp.hpp"

#include <cmath>
#include <limits>

#include "indca/errors.hpp"

namespace indca {

namespace {

constexpr double kPivotTol = 1e-10;

// Row-reduced simplex tableau over columns z >= 0 with an explicit cost row.
// Bland's rule on both the entering and the leaving choice.
struct Tableau {
  Matrix T;                 // rows x (cols + 1), last column is the rhs
  std::vector<int> basis;   // basic column per row
  Vector cost;              // reduced cost per column
  double cost_rhs = 0.0;    // negative of current objective
  std::vector<bool> allowed;

  int rows() const { return static_cast<int>(T.rows()); }
  int cols() const { return static_cast<int>(T.cols()) - 1; }

  void pivot(int r, int j) {
    T.row(r) /= T(r, j);
    for (int i = 0; i < rows(); ++i) {
      if (i != r && std::abs(T(i, j)) > 0.0) T.row(i) -= T(i, j) * T.row(r);
    }
    const double cj = cost(j);
    if (std::abs(cj) > 0.0) {
      cost -= cj * T.row(r).head(cols()).transpose();
      cost_rhs -= cj * T(r, cols());
    }
    basis[r] = j;
  }

  // Returns false on iteration-cap overrun.
  bool run() {
    const int cap = 2000 + 200 * (rows() + cols());
    for (int iter = 0; iter < cap; ++iter) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (allowed[j] && cost(j) < -kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;  // optimal

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows(); ++i) {
        const double a = T(i, enter);
        if (a > kPivotTol) {
          const double ratio = T(i, cols()) / a;
          if (ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 &&
               (leave < 0 || basis[i] < basis[leave]))) {
            best_ratio = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return true;  // unbounded; caller inspects costs
      pivot(leave, enter);
    }
    return false;
  }

  bool has_improving_column() const {
    for (int j = 0; j < cols(); ++j) {
      if (allowed[j] && cost(j) < -kPivotTol) return true;
    }
    return false;
  }
};

}  // namespace

LpResult lp_solve(const Vector& c, const Matrix& Aeq, const Vector& beq,
                  const Matrix& Aineq, const Vector& bineq) {
  const int n = static_cast<int>(c.size());
  const int r_eq = static_cast<int>(Aeq.rows());
  const int r_in = static_cast<int>(Aineq.rows());
  if ((r_eq > 0 && Aeq.cols() != n) || (r_in > 0 && Aineq.cols() != n) ||
      beq.size() != r_eq || bineq.size() != r_in) {
    throw DimensionMismatch("lp_solve: inconsistent dimensions");
  }
  const int rows = r_eq + r_in;
  const int n_struct = 2 * n + r_in;  // x+ | x- | surplus
  const int n_cols = n_struct + rows; // + artificials

  // z = [x+, x-, s] >= 0,  Aeq(x+ - x-) = beq,  Aineq(x+ - x-) - s = bineq.
  Matrix M = Matrix::Zero(rows, n_cols + 1);
  for (int i = 0; i < r_eq; ++i) {
    M.row(i).segment(0, n) = Aeq.row(i);
    M.row(i).segment(n, n) = -Aeq.row(i);
    M(i, n_cols) = beq(i);
  }
  for (int i = 0; i < r_in; ++i) {
    M.row(r_eq + i).segment(0, n) = Aineq.row(i);
    M.row(r_eq + i).segment(n, n) = -Aineq.row(i);
    M(r_eq + i, 2 * n + i) = -1.0;
    M(r_eq + i, n_cols) = bineq(i);
  }
  for (int i = 0; i < rows; ++i) {
    if (M(i, n_cols) < 0.0) M.row(i) = -M.row(i);
    M(i, n_struct + i) = 1.0;
  }

  Tableau tab;
  tab.T = M;
  tab.basis.resize(rows);
  tab.allowed.assign(n_cols, true);
  for (int i = 0; i < rows; ++i) tab.basis[i] = n_struct + i;

  // Phase 1: minimize the sum of artificials.
  tab.cost = Vector::Zero(n_cols);
  tab.cost_rhs = 0.0;
  for (int i = 0; i < rows; ++i) {
    tab.cost.head(n_struct) -= tab.T.row(i).head(n_struct).transpose();
    tab.cost_rhs -= tab.T(i, n_cols);
  }
  if (!tab.run()) {
    throw NumericalFailure("simplex phase 1 exceeded the cycling guard");
  }
  const double phase1_value = -tab.cost_rhs;
  if (phase1_value > 1e-9) {
    return LpResult{LpStatus::Infeasible, Vector(), 0.0};
  }

  // Drive zero-level artificials out of the basis; a row with no structural
  // pivot left is redundant and is dropped.
  std::vector<int> keep;
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < n_struct) {
      keep.push_back(i);
      continue;
    }
    int piv = -1;
    for (int j = 0; j < n_struct; ++j) {
      if (std::abs(tab.T(i, j)) > kPivotTol) {
        piv = j;
        break;
      }
    }
    if (piv >= 0) {
      tab.pivot(i, piv);
      keep.push_back(i);
    }
  }
  if (static_cast<int>(keep.size()) < tab.rows()) {
    Matrix T2(static_cast<int>(keep.size()), tab.T.cols());
    std::vector<int> basis2;
    for (size_t k = 0; k < keep.size(); ++k) {
      T2.row(static_cast<int>(k)) = tab.T.row(keep[k]);
      basis2.push_back(tab.basis[keep[k]]);
    }
    tab.T = std::move(T2);
    tab.basis = std::move(basis2);
  }

  // Phase 2 with the real objective; artificial columns are frozen.
  for (int j = n_struct; j < n_cols; ++j) tab.allowed[j] = false;
  Vector full_cost = Vector::Zero(n_cols);
  full_cost.segment(0, n) = c;
  full_cost.segment(n, n) = -c;
  tab.cost = full_cost;
  tab.cost_rhs = 0.0;
  for (int i = 0; i < tab.rows(); ++i) {
    const double cb = full_cost(tab.basis[i]);
    if (cb != 0.0) {
      tab.cost -= cb * tab.T.row(i).head(n_cols).transpose();
      tab.cost_rhs -= cb * tab.T(i, n_cols);
    }
  }
  if (!tab.run()) {
    throw NumericalFailure("simplex phase 2 exceeded the cycling guard");
  }
  if (tab.has_improving_column()) {
    return LpResult{LpStatus::Unbounded, Vector(), 0.0};
  }

  Vector z = Vector::Zero(n_cols);
  for (int i = 0; i < tab.rows(); ++i) {
    z(tab.basis[i]) = tab.T(i, n_cols);
  }
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x = z.segment(0, n) - z.segment(n, n);
  res.objective = c.dot(res.x);
  return res;
}

std::optional<Vector> lp_feasible(const Matrix& Aeq, const Vector& beq,
                                  const Matrix& Aineq, const Vector& bineq) {
  const int n = static_cast<int>(Aeq.cols() > 0 ? Aeq.cols() : Aineq.cols());
  const LpResult res =
      lp_solve(Vector::Zero(n), Aeq, beq, Aineq, bineq);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.x;
}

}  // namespace indca

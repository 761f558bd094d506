#include "indca/geometry.hpp"

#include <cmath>

#include "indca/errors.hpp"
#include "indca/qp_solver.hpp"

namespace indca {

namespace {

IndexSet complement(const IndexSet& alpha, int m) {
  IndexSet bar;
  size_t k = 0;
  for (int i = 0; i < m; ++i) {
    if (k < alpha.size() && alpha[k] == i) {
      ++k;
    } else {
      bar.push_back(i);
    }
  }
  return bar;
}

Matrix rows_of(const Matrix& A, const IndexSet& idx) {
  Matrix out(static_cast<Eigen::Index>(idx.size()), A.cols());
  for (size_t k = 0; k < idx.size(); ++k) out.row(static_cast<Eigen::Index>(k)) = A.row(idx[k]);
  return out;
}

Vector entries_of(const Vector& b, const IndexSet& idx) {
  Vector out(static_cast<Eigen::Index>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k) out(static_cast<Eigen::Index>(k)) = b(idx[k]);
  return out;
}

}  // namespace

IndexSet active_set(const IqpProblem& p, const Vector& x, double act_tol) {
  if (x.size() != p.n) throw DimensionMismatch("active_set: x has wrong length");
  const Vector residual = p.A * x - p.b;
  if (residual.minCoeff() < -act_tol) {
    throw InfeasiblePoint("active_set: point violates a constraint by more than act_tol");
  }
  IndexSet alpha;
  for (int i = 0; i < p.m; ++i) {
    if (std::abs(residual(i)) <= act_tol) alpha.push_back(i);
  }
  return alpha;
}

PseudoFaceDescriptor pseudo_face(const IqpProblem& p, const IndexSet& alpha) {
  const IndexSet bar = complement(alpha, p.m);
  const int n = p.n;

  // Variables (x, s): max s  s.t.  A_alpha x = b_alpha,
  // A_bar x - s*1 >= b_bar, -s >= -1.
  Vector c = Vector::Zero(n + 1);
  c(n) = -1.0;
  Matrix Aeq(static_cast<Eigen::Index>(alpha.size()), n + 1);
  Aeq.setZero();
  Aeq.leftCols(n) = rows_of(p.A, alpha);
  const Vector beq = entries_of(p.b, alpha);
  Matrix Aineq(static_cast<Eigen::Index>(bar.size()) + 1, n + 1);
  Aineq.setZero();
  Aineq.topLeftCorner(static_cast<Eigen::Index>(bar.size()), n) = rows_of(p.A, bar);
  Aineq.col(n).head(static_cast<Eigen::Index>(bar.size())).setConstant(-1.0);
  Aineq(static_cast<Eigen::Index>(bar.size()), n) = -1.0;
  Vector bineq(static_cast<Eigen::Index>(bar.size()) + 1);
  bineq.head(static_cast<Eigen::Index>(bar.size())) = entries_of(p.b, bar);
  bineq(static_cast<Eigen::Index>(bar.size())) = -1.0;

  PseudoFaceDescriptor d;
  d.alpha = alpha;
  const LpResult res = lp_solve(c, Aeq, beq, Aineq, bineq);
  d.is_empty = res.status != LpStatus::Optimal || -res.objective <= 1e-9;
  return d;
}

std::vector<PseudoFaceDescriptor> enumerate_pseudo_faces(const IqpProblem& p,
                                                         int enumeration_cap) {
  if (p.m > enumeration_cap) {
    throw TooManyConstraints("enumerate_pseudo_faces: m = " +
                             std::to_string(p.m) + " exceeds cap " +
                             std::to_string(enumeration_cap));
  }
  std::vector<PseudoFaceDescriptor> faces;
  for (unsigned mask = 0; mask < (1u << p.m); ++mask) {
    IndexSet alpha;
    for (int i = 0; i < p.m; ++i) {
      if (mask & (1u << i)) alpha.push_back(i);
    }
    PseudoFaceDescriptor d = pseudo_face(p, alpha);
    if (!d.is_empty) faces.push_back(std::move(d));
  }
  return faces;
}

NormalCone normal_cone_generators(const IqpProblem& p, const IndexSet& alpha) {
  NormalCone cone;
  for (int i : alpha) {
    cone.generators.push_back(-p.A.row(i).transpose());
  }
  return cone;
}

bool cone_is_trivial(const Matrix& eq, const Matrix& ineq) {
  return !nonzero_cone_vector(eq, ineq).has_value();
}

std::optional<Vector> nonzero_cone_vector(const Matrix& eq,
                                          const Matrix& ineq) {
  const int n = static_cast<int>(eq.cols() > 0 ? eq.cols() : ineq.cols());
  // Slab [-1,1]^n as v >= -1 and -v >= -1.
  Matrix slab(2 * n + ineq.rows(), n);
  slab.topRows(ineq.rows()) = ineq;
  slab.middleRows(ineq.rows(), n) = Matrix::Identity(n, n);
  slab.bottomRows(n) = -Matrix::Identity(n, n);
  Vector slab_rhs = Vector::Constant(2 * n + ineq.rows(), -1.0);
  slab_rhs.head(ineq.rows()).setZero();

  for (int j = 0; j < n; ++j) {
    for (const double sign : {1.0, -1.0}) {
      Matrix Aeq(eq.rows() + 1, n);
      Aeq.topRows(eq.rows()) = eq;
      Aeq.row(eq.rows()).setZero();
      Aeq(eq.rows(), j) = 1.0;
      Vector beq = Vector::Zero(eq.rows() + 1);
      beq(eq.rows()) = sign;
      if (auto witness = lp_feasible(Aeq, beq, slab, slab_rhs)) {
        return witness;
      }
    }
  }
  return std::nullopt;
}

RecessionCone recession_cone(const IqpProblem& p, const IndexSet& alpha) {
  const IndexSet bar = complement(alpha, p.m);
  if (!lp_feasible(rows_of(p.A, alpha), entries_of(p.b, alpha),
                   rows_of(p.A, bar), entries_of(p.b, bar))) {
    throw EmptyFace("recession_cone: the face is empty");
  }
  RecessionCone cone;
  cone.eq = rows_of(p.A, alpha);
  cone.ineq = rows_of(p.A, bar);
  if (cone.eq.rows() == 0) cone.eq = Matrix(0, p.n);
  if (cone.ineq.rows() == 0) cone.ineq = Matrix(0, p.n);
  cone.is_trivial = cone_is_trivial(cone.eq, cone.ineq);
  return cone;
}

Vector project_onto_C(const IqpProblem& p, const Vector& u,
                      const IndexSet& warm_working_set) {
  if (u.size() != p.n) throw DimensionMismatch("project_onto_C: u has wrong length");
  QpSubproblem sub;
  sub.H = Matrix::Identity(p.n, p.n);
  sub.g = -u;
  sub.A = p.A;
  sub.b = p.b;
  return solve_qp(sub, u, warm_working_set).x_star;
}

}  // namespace indca

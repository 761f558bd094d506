#include "indca/engine.hpp"

#include <cmath>
#include <limits>

#include "indca/errors.hpp"
#include "indca/geometry.hpp"
#include "indca/qp_solver.hpp"

namespace indca {

namespace {

// Non-throwing activity classification with a norm-aware tolerance, so trace
// records stay well defined even on diverging runs.
IndexSet classify_active(const IqpProblem& p, const Vector& x) {
  const double tol = 1e-9 * std::max(1.0, x.norm());
  const Vector residual = p.A * x - p.b;
  IndexSet alpha;
  for (int i = 0; i < p.m; ++i) {
    if (std::abs(residual(i)) <= tol) alpha.push_back(i);
  }
  return alpha;
}

}  // namespace

Vector indca1_step(const IqpProblem& p, const DcDecomposition& dc,
                   const Vector& x_k, const Vector& x_km1, double gamma,
                   const IndexSet& warm_working_set) {
  if (dc.variant != Variant::ProjectionA) {
    throw VariantMismatch("indca1_step requires a ProjectionA decomposition");
  }
  const double eta = dc.eta;
  const Vector u = (1.0 + gamma / eta) * x_k - (gamma / eta) * x_km1 -
                   (p.Q * x_k + p.q) / eta;
  return project_onto_C(p, u, warm_working_set);
}

Vector indca2_step(const IqpProblem& p, const DcDecomposition& dc,
                   const Vector& x_k, const Vector& x_km1, double gamma,
                   const IndexSet& warm_working_set) {
  const QpSubproblem sub = build_indca2_subproblem(p, dc, x_k, x_km1, gamma);
  return solve_qp(sub, x_k, warm_working_set).x_star;
}

SolveResult run(const IqpProblem& p, const DcDecomposition& dc,
                const InertialConfig& cfg, const Vector& x0, Algorithm algo) {
  if (x0.size() != p.n) throw DimensionMismatch("run: x0 has wrong length");
  if (!(cfg.gamma >= 0.0 && cfg.gamma < dc.rho / 2.0)) {
    throw InvalidGamma("run: gamma is outside [0, rho/2) for this decomposition");
  }
  if ((algo == Algorithm::InDCA1) != (dc.variant == Variant::ProjectionA)) {
    throw VariantMismatch("run: algorithm and decomposition variant disagree");
  }
  const double gamma = cfg.gamma;
  const double eta = dc.eta;

  SolveResult result;
  Vector x = x0;
  if (p.m > 0 && (p.A * x - p.b).minCoeff() < -1e-9) {
    x = project_onto_C(p, x);
    result.projected_start = true;
  }

  const auto record = [&](int k, const Vector& xk, const Vector& d,
                          double step_norm, double incl) {
    TraceRecord rec;
    rec.k = k;
    rec.x = xk;
    rec.d = d;
    rec.f_val = objective(p, xk);
    rec.step_norm = step_norm;
    rec.energy = rec.f_val + cfg.alpha * step_norm * step_norm;
    rec.inclusion_residual = incl;
    rec.active = classify_active(p, xk);
    result.trace.push_back(std::move(rec));
  };

  Vector x_prev = x;  // x^-1 = x^0
  record(0, x, Vector::Zero(p.n), 0.0, 0.0);

  for (int k = 0; k < cfg.max_iter; ++k) {
    const Vector d = gamma * (x - x_prev);
    const IndexSet& warm = result.trace.back().active;
    const Vector x_next = algo == Algorithm::InDCA1
                              ? indca1_step(p, dc, x, x_prev, gamma, warm)
                              : indca2_step(p, dc, x, x_prev, gamma, warm);

    const double step_norm = (x_next - x).norm();
    const double incl =
        algo == Algorithm::InDCA1
            ? inclusion_residual_projection(p, x_next, x, x_prev, eta, gamma)
            : inclusion_residual_proximal(p, x_next, x, x_prev, eta, gamma);
    record(k + 1, x_next, d, step_norm, incl);

    if (x_next.norm() > cfg.divergence_norm_cap) {
      result.status = SolveStatus::Diverged;
      result.final_point = x_next;
      break;
    }
    if (step_norm <= cfg.tol && d.norm() <= cfg.tol) {
      // Stopping test of the underlying scheme: return (x^k, f(x^k)).
      result.status = SolveStatus::ToleranceReached;
      result.final_point = x;
      break;
    }
    x_prev = x;
    x = x_next;
    if (k + 1 == cfg.max_iter) {
      result.status = SolveStatus::MaxIterReached;
      result.final_point = x_next;
    }
  }
  if (result.final_point.size() == 0) {
    // max_iter == trace length bound hit without a stop test firing
    result.status = SolveStatus::MaxIterReached;
    result.final_point = x;
  }

  result.final_objective = objective(p, result.final_point);
  result.kkt = kkt_certificate(p, result.final_point);
  return result;
}

DiagnosticsReport diagnostics_check(const SolveTrace& trace,
                                    const InertialConfig& cfg,
                                    const DcDecomposition& /*dc*/) {
  if (trace.size() < 2) {
    throw TraceTooShort("diagnostics_check needs at least two records");
  }
  DiagnosticsReport report;
  report.max_decrease_violation = -std::numeric_limits<double>::infinity();
  double f_min = trace.front().f_val;
  double step_square_sum = 0.0;
  for (size_t k = 1; k < trace.size(); ++k) {
    const double violation = trace[k].energy - trace[k - 1].energy +
                             cfg.alpha1 * trace[k - 1].step_norm *
                                 trace[k - 1].step_norm;
    report.max_decrease_violation =
        std::max(report.max_decrease_violation, violation);
    step_square_sum += trace[k].step_norm * trace[k].step_norm;
    f_min = std::min(f_min, trace[k].f_val);
  }
  report.decrease_ok = report.max_decrease_violation <= 1e-8;
  report.weighted_step_square_sum = cfg.alpha1 * step_square_sum;
  report.sum_bound = trace.front().f_val - f_min;
  report.sum_ok =
      report.weighted_step_square_sum <= report.sum_bound + 1e-8;
  report.last_step_norm = trace.back().step_norm;
  return report;
}

}  // namespace indca

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "indca/builtin_example.hpp"
#include "indca/engine.hpp"
#include "indca/errors.hpp"
#include "indca/geometry.hpp"
#include "indca/qp_solver.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace indca;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

struct ExampleSetup {
  IqpProblem p = builtin_example_problem();
  DcDecomposition dc =
      make_decomposition(p, Variant::ProjectionA, EtaPolicy::explicit_value(3.0));
  DcDecomposition dcb =
      make_decomposition(p, Variant::ProximalB, EtaPolicy::explicit_value(3.0));
  InertialConfig cfg = make_config(dc, GammaSpec::absolute(1.0 / 3.0), 1e-8, 1000);
};

}  // namespace

TEST_CASE("projection steps from the reference trajectories") {
  ExampleSetup s;
  const double g = 1.0 / 3.0;

  // fixed point anywhere on the upper edge
  for (const double t : {0.0, 0.4, 2.0}) {
    const Vector x = vec2(0.25 + t, 0.25 + t);
    CHECK((indca1_step(s.p, s.dc, x, x, g) - x).norm() <= 1e-12);
  }
  CHECK(indca1_step(s.p, s.dc, vec2(0.25, 0.125), vec2(0.25, 0.125), g)
            .isApprox(vec2(0.25, 5.0 / 24.0), 1e-12));
  CHECK(indca1_step(s.p, s.dc, vec2(1.0, 0.0), vec2(1.0, 0.0), g)
            .isApprox(vec2(1.0 / 3.0, 0.0), 1e-12));
}

TEST_CASE("proximal steps and their fixed points") {
  ExampleSetup s;
  const double g = 1.0 / 3.0;

  // the isolated KKT vertex is a fixed point
  const Vector vertex = vec2(0.25, 0.0);
  CHECK((indca2_step(s.p, s.dcb, vertex, vertex, g) - vertex).norm() <= 1e-10);

  // gamma = 0 fixes every KKT point
  for (const Vector& x : {vec2(0.5, 0.5), vec2(1.5, -1.5), vertex}) {
    CHECK((indca2_step(s.p, s.dcb, x, x, 0.0) - x).norm() <= 1e-9);
  }

  // from (1, 0) the subproblem minimizer is interior at (3/5, 0); pinned by
  // the enumeration oracle
  const Vector from = vec2(1.0, 0.0);
  const QpSubproblem sub = build_indca2_subproblem(s.p, s.dcb, from, from, g);
  const auto oracle = testing::brute_force_qp(sub.H, sub.g, sub.A, sub.b);
  REQUIRE(oracle.has_value());
  CHECK(oracle->isApprox(vec2(0.6, 0.0), 1e-12));
  CHECK(indca2_step(s.p, s.dcb, from, from, g).isApprox(*oracle, 1e-10));
}

TEST_CASE("run reproduces the edge-tail trajectory") {
  ExampleSetup s;
  const SolveResult r = run(s.p, s.dc, s.cfg, vec2(0.25, 0.125), Algorithm::InDCA1);
  REQUIRE(r.status == SolveStatus::ToleranceReached);
  REQUIRE(r.trace.size() >= 4);
  CHECK(r.trace[0].x.isApprox(vec2(0.25, 0.125)));
  CHECK(r.trace[1].x.isApprox(vec2(0.25, 5.0 / 24.0), 1e-9));
  CHECK(r.trace[2].x.isApprox(vec2(0.25, 0.25), 1e-9));
  CHECK(r.trace[3].x.isApprox(vec2(109.0 / 432.0, 109.0 / 432.0), 1e-9));
  CHECK(r.final_point(0) == doctest::Approx(r.final_point(1)));
  CHECK(r.kkt.is_kkt);

  // trace bookkeeping: d of record k is gamma * (x^{k-1} - x^{k-2})
  for (size_t k = 2; k < r.trace.size(); ++k) {
    const Vector expected =
        s.cfg.gamma * (r.trace[k - 1].x - r.trace[k - 2].x);
    CHECK((r.trace[k].d - expected).norm() <= 1e-12);
  }
  CHECK(r.trace[1].d.norm() == 0.0);
}

TEST_CASE("run stops immediately at fixed points") {
  ExampleSetup s;
  const SolveResult r = run(s.p, s.dc, s.cfg, vec2(0.25, 0.0), Algorithm::InDCA1);
  CHECK(r.status == SolveStatus::ToleranceReached);
  CHECK(r.trace.size() == 2);
  CHECK(r.final_point.isApprox(vec2(0.25, 0.0)));
  CHECK(r.kkt.is_kkt);
}

TEST_CASE("interior starts walk to their tabulated endpoints") {
  ExampleSetup s;

  const SolveResult r4 = run(s.p, s.dc, s.cfg, vec2(1.0, 0.0), Algorithm::InDCA1);
  REQUIRE(r4.status == SolveStatus::ToleranceReached);
  REQUIRE(r4.trace.size() >= 4);
  CHECK(r4.trace[1].x.isApprox(vec2(1.0 / 3.0, 0.0), 1e-9));
  CHECK(r4.trace[2].x.isApprox(vec2(0.25, 0.0), 1e-9));
  CHECK(r4.trace[3].x.isApprox(vec2(0.25, 0.0), 1e-9));
  CHECK(r4.final_point.isApprox(vec2(0.25, 0.0), 1e-9));

  const SolveResult r5 = run(s.p, s.dc, s.cfg, vec2(1.0, 0.125), Algorithm::InDCA1);
  REQUIRE(r5.status == SolveStatus::ToleranceReached);
  REQUIRE(r5.trace.size() >= 3);
  CHECK(r5.trace[1].x.isApprox(vec2(1.0 / 3.0, 5.0 / 24.0), 1e-9));
  CHECK(r5.trace[2].x.isApprox(vec2(0.25, 0.25), 1e-9));
  CHECK(r5.final_point.isApprox(vec2(0.25, 0.25), 1e-9));
}

TEST_CASE("every iterate stays feasible and certified") {
  ExampleSetup s;
  for (const Vector& x0 : {vec2(0.25, 0.125), vec2(1.0, 0.125), vec2(3.0, -2.9)}) {
    const SolveResult r = run(s.p, s.dc, s.cfg, x0, Algorithm::InDCA1);
    for (const TraceRecord& rec : r.trace) {
      CHECK((s.p.A * rec.x - s.p.b).minCoeff() >= -1e-9);
      CHECK(rec.inclusion_residual <= 1e-8);
    }
  }
}

TEST_CASE("diagnostics pass on reference traces and fail on corrupted ones") {
  ExampleSetup s;
  const SolveResult r = run(s.p, s.dc, s.cfg, vec2(0.25, 0.125), Algorithm::InDCA1);

  const DiagnosticsReport ok = diagnostics_check(r.trace, s.cfg, s.dc);
  CHECK(ok.decrease_ok);
  CHECK(ok.sum_ok);
  CHECK(ok.last_step_norm <= s.cfg.tol);

  // single-step fixed-point trace: both quantities are exactly zero
  const SolveResult fixed = run(s.p, s.dc, s.cfg, vec2(0.25, 0.0), Algorithm::InDCA1);
  const DiagnosticsReport triv = diagnostics_check(fixed.trace, s.cfg, s.dc);
  CHECK(triv.max_decrease_violation <= 0.0);
  CHECK(triv.weighted_step_square_sum == 0.0);

  // corrupting one iterate breaks the energy decrease
  SolveTrace bad = r.trace;
  const size_t mid = bad.size() / 2;
  bad[mid].x += vec2(1.0, 1.0);
  bad[mid].f_val = objective(s.p, bad[mid].x);
  bad[mid].step_norm = (bad[mid].x - bad[mid - 1].x).norm();
  bad[mid].energy =
      bad[mid].f_val + s.cfg.alpha * bad[mid].step_norm * bad[mid].step_norm;
  const DiagnosticsReport corrupted = diagnostics_check(bad, s.cfg, s.dc);
  CHECK_FALSE(corrupted.decrease_ok);

  CHECK_THROWS_AS(diagnostics_check({r.trace[0]}, s.cfg, s.dc), TraceTooShort);
}

TEST_CASE("gamma = 0 reduces to the plain DCA recursions") {
  ExampleSetup s;
  const InertialConfig cfg0 = make_config(s.dc, GammaSpec::absolute(0.0), 1e-10, 500);

  const Vector x0 = vec2(2.0, 0.3);
  const SolveResult r1 = run(s.p, s.dc, cfg0, x0, Algorithm::InDCA1);
  Vector x = x0;
  for (size_t k = 1; k < r1.trace.size(); ++k) {
    x = project_onto_C(s.p, x - (s.p.Q * x + s.p.q) / s.dc.eta);
    CHECK((r1.trace[k].x - x).norm() <= 1e-10);
    CHECK(r1.trace[k].d.norm() == 0.0);
  }

  const InertialConfig cfg0b = make_config(s.dcb, GammaSpec::absolute(0.0), 1e-10, 500);
  const SolveResult r2 = run(s.p, s.dcb, cfg0b, x0, Algorithm::InDCA2);
  x = x0;
  for (size_t k = 1; k < r2.trace.size(); ++k) {
    QpSubproblem plain;
    plain.H = s.p.Q + s.dcb.eta * Matrix::Identity(2, 2);
    plain.g = s.p.q - s.dcb.eta * x;
    plain.A = s.p.A;
    plain.b = s.p.b;
    x = solve_qp(plain).x_star;
    CHECK((r2.trace[k].x - x).norm() <= 1e-10);
    CHECK(r2.trace[k].d.norm() == 0.0);
  }
}

TEST_CASE("energy decreases on random bounded instances") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const IqpProblem p = testing::random_bounded_iqp(3, 7, rng);
    for (const Algorithm algo : {Algorithm::InDCA1, Algorithm::InDCA2}) {
      const Variant variant = algo == Algorithm::InDCA1 ? Variant::ProjectionA
                                                        : Variant::ProximalB;
      const DcDecomposition dc =
          make_decomposition(p, variant, EtaPolicy::automatic());
      const InertialConfig cfg = make_config(dc);
      const SolveResult r = run(p, dc, cfg, p.A.row(0).transpose(), algo);
      REQUIRE(r.status == SolveStatus::ToleranceReached);
      const DiagnosticsReport rep = diagnostics_check(r.trace, cfg, dc);
      CHECK(rep.decrease_ok);
      CHECK(rep.sum_ok);
      CHECK(r.kkt.is_kkt);
    }
  }
}

TEST_CASE("repeated fixed points certify as KKT") {
  ExampleSetup s;
  for (const Vector& x0 : {vec2(0.25, 0.0), vec2(0.7, 0.7), vec2(0.3, -0.3)}) {
    const SolveResult r = run(s.p, s.dc, s.cfg, x0, Algorithm::InDCA1);
    if (r.trace.size() >= 3) continue;  // only inspect immediate fixed points
    CHECK(kkt_certificate(s.p, r.final_point).stationarity_residual <= 1e-8);
  }
}

TEST_CASE("unbounded objective diverges and is flagged") {
  Matrix Q(1, 1), A(1, 1);
  Q << -2;
  A << 1;
  const IqpProblem p = build_problem(1, 1, Q, Vector::Zero(1), A, Vector::Zero(1));
  const DcDecomposition dc =
      make_decomposition(p, Variant::ProjectionA, EtaPolicy::automatic());
  const InertialConfig cfg = make_config(dc);
  const SolveResult r = run(p, dc, cfg, Vector::Ones(1), Algorithm::InDCA1);
  CHECK(r.status == SolveStatus::Diverged);
  CHECK(r.final_point.cwiseAbs().maxCoeff() > 1e12);
}

TEST_CASE("configuration and variant mismatches are rejected") {
  ExampleSetup s;

  // a config built for a larger rho can carry an inadmissible gamma
  const DcDecomposition wide = make_decomposition(
      builtin_example_problem(), Variant::ProjectionA, EtaPolicy::explicit_value(10.0));
  const InertialConfig too_big = make_config(wide, GammaSpec::absolute(3.0));
  CHECK_THROWS_AS(run(s.p, s.dc, too_big, vec2(1.0, 0.0), Algorithm::InDCA1),
                  InvalidGamma);

  CHECK_THROWS_AS(run(s.p, s.dc, s.cfg, vec2(1.0, 0.0), Algorithm::InDCA2),
                  VariantMismatch);
}

TEST_CASE("Tol = 0 is accepted and the iteration cap still applies") {
  ExampleSetup s;
  const InertialConfig cfg0 =
      make_config(s.dc, GammaSpec::absolute(1.0 / 3.0), 0.0, 50);
  const SolveResult r = run(s.p, s.dc, cfg0, vec2(0.25, 0.125), Algorithm::InDCA1);
  // with an exact-zero stopping test the run either hits a true fixed point
  // or the cap; it must terminate either way
  CHECK(r.trace.size() <= 51);
  CHECK((r.status == SolveStatus::ToleranceReached ||
         r.status == SolveStatus::MaxIterReached));
}

TEST_CASE("infeasible starts are projected and flagged") {
  ExampleSetup s;
  const SolveResult r = run(s.p, s.dc, s.cfg, vec2(-1.0, 0.0), Algorithm::InDCA1);
  CHECK(r.projected_start);
  CHECK((s.p.A * r.trace[0].x - s.p.b).minCoeff() >= -1e-9);
}

TEST_CASE("reference harness passes end to end") {
  std::ostringstream out;
  std::vector<ReferenceCaseResult> rows;
  CHECK(run_reference_cases(out, &rows));
  CHECK(rows.size() == 5);
  CHECK(out.str().find("FAIL") == std::string::npos);
}

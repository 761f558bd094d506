#include "indca/builtin_example.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "indca/engine.hpp"

namespace indca {

IqpProblem builtin_example_problem() {
  Matrix Q(2, 2);
  Q << 2, 0, 0, -2;
  Vector q = Vector::Zero(2);
  Matrix A(3, 2);
  A << 1, -1, 1, 1, 1, 0;
  Vector b(3);
  b << 0, 0, 0.25;
  return build_problem(2, 3, Q, q, A, b);
}

std::vector<ComponentDescription> builtin_example_components() {
  const auto edge = [](double sign) {
    Polyhedron piece;
    piece.Aeq = Matrix(1, 2);
    piece.Aeq << 1, -sign;
    piece.beq = Vector::Zero(1);
    piece.Aineq = Matrix(1, 2);
    piece.Aineq << 1, 0;
    piece.bineq = Vector::Constant(1, 0.25);
    return piece;
  };
  ComponentDescription upper, lower, vertex;
  upper.pieces.push_back(edge(1.0));
  lower.pieces.push_back(edge(-1.0));
  Polyhedron pt;
  pt.Aeq = Matrix(2, 2);
  pt.Aeq << 1, 0, 0, 1;
  pt.beq = Vector(2);
  pt.beq << 0.25, 0;
  pt.Aineq = Matrix(0, 2);
  pt.bineq = Vector(0);
  vertex.pieces.push_back(pt);
  return {upper, lower, vertex};
}

IqpProblem builtin_box_problem() {
  Matrix Q(2, 2);
  Q << 2, 0, 0, -2;
  Vector q = Vector::Zero(2);
  Matrix A(4, 2);
  A << 1, 0, 0, 1, -1, 0, 0, -1;
  Vector b(4);
  b << 0, 0, -1, -1;
  return build_problem(2, 4, Q, q, A, b);
}

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

SolveResult solve_case(const IqpProblem& p, const Vector& x0) {
  const DcDecomposition dc = make_decomposition(
      p, Variant::ProjectionA, EtaPolicy::explicit_value(3.0));
  const InertialConfig cfg =
      make_config(dc, GammaSpec::absolute(1.0 / 3.0), 1e-8, 1000);
  return run(p, dc, cfg, x0, Algorithm::InDCA1);
}

bool close(const Vector& a, const Vector& b, double tol = 1e-9) {
  return a.size() == b.size() && (a - b).lpNorm<Eigen::Infinity>() <= tol;
}

std::string vec_str(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

struct CaseCheck {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

// Trace must start with the given iterates and then only repeat the last one.
void expect_prefix_then_fixed(CaseCheck& c, const SolveTrace& trace,
                              const std::vector<Vector>& prefix) {
  c.expect(trace.size() >= prefix.size(), "trace shorter than the tabulated run");
  if (!c.ok) return;
  for (size_t i = 0; i < prefix.size(); ++i) {
    c.expect(close(trace[i].x, prefix[i]),
             "iterate " + std::to_string(i) + " is " + vec_str(trace[i].x) +
                 ", expected " + vec_str(prefix[i]));
  }
  for (size_t i = prefix.size(); i < trace.size(); ++i) {
    c.expect(close(trace[i].x, prefix.back()),
             "iterate " + std::to_string(i) + " left the fixed point");
  }
}

}  // namespace

bool run_reference_cases(std::ostream& out,
                         std::vector<ReferenceCaseResult>* results) {
  const IqpProblem p = builtin_example_problem();
  std::vector<ReferenceCaseResult> table;

  {  // case 1: starts on either unbounded edge are one-step fixed points
    CaseCheck c;
    for (const double t : {0.0, 1.0}) {
      for (const double sign : {1.0, -1.0}) {
        const Vector x0 = vec2(0.25 + t, sign * (0.25 + t));
        const SolveResult r = solve_case(p, x0);
        c.expect(r.status == SolveStatus::ToleranceReached, "did not stop");
        c.expect(r.trace.size() == 2, "expected exactly one step");
        c.expect(close(r.final_point, x0),
                 "moved away from " + vec_str(x0) + " to " +
                     vec_str(r.final_point));
        c.expect(std::abs(r.final_objective) <= 1e-9,
                 "objective at the edge fixed point is not 0");
      }
    }
    table.push_back({"case 1: fixed points on the unbounded edges", c.ok, c.detail});
  }

  {  // case 2: the isolated vertex (1/4, 0) is a one-step KKT fixed point
    CaseCheck c;
    const Vector x0 = vec2(0.25, 0.0);
    const SolveResult r = solve_case(p, x0);
    c.expect(r.status == SolveStatus::ToleranceReached, "did not stop");
    c.expect(r.trace.size() == 2, "expected exactly one step");
    c.expect(close(r.final_point, x0), "moved away from the vertex");
    c.expect(r.kkt.is_kkt, "final point not certified KKT");
    c.expect(std::abs(r.kkt.multipliers(2) - 0.5) <= 1e-8,
             "multiplier on row 3 is not 1/2");
    table.push_back({"case 2: KKT fixed point at (1/4, 0)", c.ok, c.detail});
  }

  {  // case 3: geometric tail along the edge x1 = x2
    CaseCheck c;
    const SolveResult r = solve_case(p, vec2(0.25, 0.125));
    c.expect(r.status == SolveStatus::ToleranceReached, "did not stop");
    c.expect(r.trace.size() >= 4, "trace too short");
    if (c.ok) {
      c.expect(close(r.trace[1].x, vec2(0.25, 5.0 / 24.0)), "x1 mismatch");
      c.expect(close(r.trace[2].x, vec2(0.25, 0.25)), "x2 mismatch");
      c.expect(close(r.trace[3].x, vec2(109.0 / 432.0, 109.0 / 432.0)),
               "x3 mismatch");
    }
    // From k = 3 on the iterates stay on the edge and obey
    // t_{k+1} = (10/9) t_k - (1/9) t_{k-1}.
    for (size_t k = 3; c.ok && k + 1 < r.trace.size(); ++k) {
      const double tk = r.trace[k].x(0);
      const double tkm1 = r.trace[k - 1].x(0);
      const double tkp1 = r.trace[k + 1].x(0);
      c.expect(std::abs(r.trace[k + 1].x(1) - tkp1) <= 1e-9,
               "iterate left the edge x1 = x2");
      c.expect(std::abs(tkp1 - (10.0 * tk - tkm1) / 9.0) <= 1e-9,
               "second-order recurrence violated at k = " + std::to_string(k));
    }
    c.expect(r.final_point(0) <= 97.0 / 384.0 + 1e-9,
             "terminal value exceeds the closed-form limit 97/384");
    c.expect(std::abs(r.final_point(0) - r.final_point(1)) <= 1e-9,
             "final point is not on the edge");
    table.push_back({"case 3: geometric tail on the edge x1 = x2", c.ok, c.detail});
  }

  {  // case 4: interior start (1, 0) walks to the vertex in two moves
    CaseCheck c;
    const SolveResult r = solve_case(p, vec2(1.0, 0.0));
    c.expect(r.status == SolveStatus::ToleranceReached, "did not stop");
    expect_prefix_then_fixed(c, r.trace,
                             {vec2(1.0, 0.0), vec2(1.0 / 3.0, 0.0),
                              vec2(0.25, 0.0), vec2(0.25, 0.0)});
    c.expect(close(r.final_point, vec2(0.25, 0.0)), "wrong final point");
    c.expect(r.kkt.is_kkt, "final point not certified KKT");
    table.push_back({"case 4: interior start (1, 0) to the vertex", c.ok, c.detail});
  }

  {  // case 5: interior start (1, 1/8) reaches the global solution (1/4, 1/4)
    CaseCheck c;
    const SolveResult r = solve_case(p, vec2(1.0, 0.125));
    c.expect(r.status == SolveStatus::ToleranceReached, "did not stop");
    expect_prefix_then_fixed(
        c, r.trace,
        {vec2(1.0, 0.125), vec2(1.0 / 3.0, 5.0 / 24.0), vec2(0.25, 0.25)});
    c.expect(close(r.final_point, vec2(0.25, 0.25)), "wrong final point");
    table.push_back(
        {"case 5: interior start (1, 1/8) to the global solution", c.ok, c.detail});
  }

  bool all = true;
  for (const ReferenceCaseResult& row : table) {
    out << (row.passed ? "PASS  " : "FAIL  ") << row.name;
    if (!row.passed) out << "  [" << row.detail << "]";
    out << "\n";
    all = all && row.passed;
  }
  if (results) *results = table;
  return all;
}

}  // namespace indca

// Command-line front end: solve an IQP from a problem file, check the
// face qualification condition, or run the built-in reference example.
//
// Exit codes: 0 success, 1 qualification failure / reference mismatch,
// 2 usage or input error, 3 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "indca/builtin_example.hpp"
#include "indca/engine.hpp"
#include "indca/errors.hpp"
#include "indca/problem_io.hpp"

namespace {

using namespace indca;

int log_level() {
  const char* v = std::getenv("IDCA_LOG");
  return v ? std::atoi(v) : 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, sep)) parts.push_back(part);
  return parts;
}

Vector parse_vector_arg(const std::string& s, int n) {
  const std::vector<std::string> parts = split(s, ',');
  if (static_cast<int>(parts.size()) != n) {
    throw ParseError("--x0 expects " + std::to_string(n) + " components");
  }
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = parse_number(parts[i]);
  return v;
}

std::string index_set_str(const IndexSet& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << "}";
  return os.str();
}

std::string vector_str(const Vector& v) {
  std::ostringstream os;
  for (int i = 0; i < v.size(); ++i) os << (i ? " " : "") << format_double(v(i));
  return os.str();
}

int cmd_solve(const std::string& file, const std::string& algo_name,
              const std::string& eta_arg, const std::string& gamma_arg,
              double tol, int max_iter, const std::string& x0_arg,
              const std::string& trace_path, const std::string& components_arg) {
  const ProblemFile pf = parse_problem_file(file);
  const IqpProblem& p = pf.problem;

  const Algorithm algo =
      algo_name == "indca2" ? Algorithm::InDCA2 : Algorithm::InDCA1;
  const Variant variant =
      algo == Algorithm::InDCA1 ? Variant::ProjectionA : Variant::ProximalB;

  EtaPolicy eta = EtaPolicy::automatic();
  if (eta_arg != "auto") eta = EtaPolicy::explicit_value(parse_number(eta_arg));

  GammaSpec gamma = GammaSpec::fraction(0.9);
  if (!gamma_arg.empty()) {
    if (gamma_arg.rfind("frac:", 0) == 0) {
      gamma = GammaSpec::fraction(parse_number(gamma_arg.substr(5)));
    } else {
      gamma = GammaSpec::absolute(parse_number(gamma_arg));
    }
  }

  Vector x0;
  if (!x0_arg.empty()) {
    const auto named = pf.starts.find(x0_arg);
    x0 = named != pf.starts.end() ? named->second : parse_vector_arg(x0_arg, p.n);
  } else if (pf.starts.count("x0")) {
    x0 = pf.starts.at("x0");
  } else {
    x0 = *lp_feasible(Matrix(0, p.n), Vector(0), p.A, p.b);
  }

  const DcDecomposition dc = make_decomposition(p, variant, eta);
  const InertialConfig cfg = make_config(dc, gamma, tol, max_iter);
  if (log_level() >= 1) {
    std::cerr << "eta=" << dc.eta << " rho=" << dc.rho << " gamma=" << cfg.gamma
              << " x0=(" << vector_str(x0) << ")\n";
  }

  const SolveResult result = run(p, dc, cfg, x0, algo);
  if (log_level() >= 2) {
    for (const TraceRecord& rec : result.trace) {
      std::cerr << "k=" << rec.k << " x=(" << vector_str(rec.x)
                << ") f=" << rec.f_val << " step=" << rec.step_norm << "\n";
    }
  }

  const char* status = result.status == SolveStatus::ToleranceReached
                           ? "tolerance-reached"
                           : result.status == SolveStatus::MaxIterReached
                                 ? "max-iter-reached"
                                 : "diverged";
  std::cout << "status: " << status << "\n";
  std::cout << "final point: " << vector_str(result.final_point) << "\n";
  std::cout << "objective: " << format_double(result.final_objective) << "\n";
  std::cout << "iterations: " << result.trace.size() - 1 << "\n";
  std::cout << "kkt: " << (result.kkt.is_kkt ? "yes" : "no")
            << " (stationarity " << format_double(result.kkt.stationarity_residual)
            << ", feasibility " << format_double(result.kkt.feasibility_violation)
            << ", complementarity "
            << format_double(result.kkt.complementarity_violation) << ")\n";
  if (result.projected_start) {
    std::cout << "note: x0 was outside C and was projected onto it\n";
  }
  if (result.status == SolveStatus::Diverged) {
    std::cout << "note: divergence suggests the qualification condition fails "
                 "on an unbounded pseudo-face or the objective is unbounded "
                 "below on C\n";
  }

  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) throw ParseError("cannot write trace file '" + trace_path + "'");
    write_trace_csv(out, result.trace, p.n);
  }

  if (!components_arg.empty()) {
    std::vector<ComponentDescription> comps;
    std::vector<std::string> names = split(components_arg, ',');
    for (const std::string& name : names) {
      const auto it = pf.components.find(name);
      if (it == pf.components.end()) {
        throw ParseError("unknown component '" + name + "'");
      }
      comps.push_back(it->second);
    }
    const ComponentConvergenceReport rep =
        component_convergence_check(result.trace, comps);
    std::cout << "component convergence: "
              << (rep.distance_converged ? "converged" : "not converged")
              << " to '" << names[rep.best_component] << "' (final distance "
              << format_double(rep.final_distance) << ", objective spread "
              << format_double(rep.objective_spread) << ")\n";
  }

  return result.status == SolveStatus::Diverged ? 3 : 0;
}

int cmd_qc(const std::string& file) {
  const ProblemFile pf = parse_problem_file(file);
  const QcReport report = qc_check(pf.problem);
  for (const QcFaceReport& fr : report.per_face) {
    std::cout << "pseudo-face " << index_set_str(fr.alpha) << ": ";
    switch (fr.verdict) {
      case QcVerdict::SatisfiedVacuously:
        std::cout << "satisfied (bounded face)";
        break;
      case QcVerdict::Satisfied:
        std::cout << "satisfied";
        break;
      case QcVerdict::Violated:
        std::cout << "VIOLATED, witness direction (" << vector_str(*fr.witness)
                  << ")";
        break;
    }
    std::cout << "\n";
  }
  std::cout << "overall: " << (report.holds ? "holds" : "FAILS") << "\n";
  return report.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inertial DC algorithms for indefinite QPs over {Ax >= b}"};
  app.require_subcommand(1);

  std::string file, algo = "indca1", eta = "auto", gamma, x0, trace_path,
                    components;
  double tol = 1e-8;
  int max_iter = 100000;

  CLI::App* solve = app.add_subcommand("solve", "run InDCA1/InDCA2 on a problem file");
  solve->add_option("file", file, "problem file")->required();
  solve->add_option("--algo", algo, "indca1 (projection) or indca2 (proximal)")
      ->check(CLI::IsMember({"indca1", "indca2"}));
  solve->add_option("--eta", eta, "decomposition parameter: auto or a value");
  solve->add_option("--gamma", gamma,
                    "inertial weight: a value or frac:<theta> of rho/2");
  solve->add_option("--tol", tol, "stopping tolerance");
  solve->add_option("--max-iter", max_iter, "iteration cap");
  solve->add_option("--x0", x0, "named start or comma-separated vector");
  solve->add_option("--trace", trace_path, "write per-iteration CSV here");
  solve->add_option("--components", components,
                    "comma-separated component names for convergence check");

  std::string qc_file;
  CLI::App* qc = app.add_subcommand("qc", "check the face qualification condition");
  qc->add_option("file", qc_file, "problem file")->required();

  CLI::App* rep = app.add_subcommand(
      "reproduce-example", "run the built-in reference example end to end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(file, algo, eta, gamma, tol, max_iter, x0, trace_path,
                       components);
    }
    if (qc->parsed()) {
      return cmd_qc(qc_file);
    }
    if (rep->parsed()) {
      return run_reference_cases(std::cout) ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleConstraintSet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidGamma& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const EtaTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooManyConstraints& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

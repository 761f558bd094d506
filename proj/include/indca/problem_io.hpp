#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "indca/certify.hpp"
#include "indca/model.hpp"
#include "indca/trace.hpp"

namespace indca {

// Textual problem document. Tokens are whitespace separated, `#` starts a
// comment to end of line, numbers are decimal or rational "p/q". Grammar:
//
//   n <int>        m <int>
//   Q  <n*n numbers, row-major>
//   q  <n numbers>
//   A  <m*n numbers, row-major>
//   b  <m numbers>
//   start <name> <n numbers>                          (repeatable)
//   component <name> pieces <count>                   (repeatable)
//     piece eq <k> ineq <l>
//       <k rows of n coefficients and a right-hand side>
//       <l rows of n coefficients and a right-hand side>
struct ProblemFile {
  IqpProblem problem;
  std::map<std::string, Vector> starts;
  std::map<std::string, ComponentDescription> components;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_file(const std::string& path);

std::string serialize_problem(const ProblemFile& pf);

// Decimal or rational literal to double; throws ParseError.
double parse_number(const std::string& token);

// Shortest representation that round-trips through a double.
std::string format_double(double v);

// Per-iteration trace as CSV: header
//   k,x0,...,x{n-1},step_norm,d_norm,f,energy,inclusion_residual,active_set
// with LF line endings and 1-based active-set indices joined by ';'.
void write_trace_csv(std::ostream& out, const SolveTrace& trace, int n);

}  // namespace indca

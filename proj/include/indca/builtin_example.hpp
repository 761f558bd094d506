#pragma once

#include <iosfwd>
#include <vector>

#include "indca/certify.hpp"
#include "indca/model.hpp"

namespace indca {

// Built-in 2-D reference instance
//
//   min x1^2 - x2^2   over  C = {x | x1 >= |x2|, x1 >= 1/4},
//
// i.e. Q = diag(2,-2), q = 0, A = [1 -1; 1 1; 1 0], b = (0, 0, 1/4). The
// iteration with eta = 3 and gamma = 1/3 admits closed-form trajectories,
// which makes this the golden instance for end-to-end checks: the KKT set is
// the union of the two unbounded edges and the isolated vertex (1/4, 0).
IqpProblem builtin_example_problem();

// The three connected components of the KKT set: the edge x1 = x2 >= 1/4,
// the edge x1 = -x2 >= 1/4, and the point (1/4, 0).
std::vector<ComponentDescription> builtin_example_components();

// A bounded box [0,1]^2 companion instance (every pseudo-face bounded).
IqpProblem builtin_box_problem();

struct ReferenceCaseResult {
  std::string name;
  bool passed = false;
  std::string detail;  // filled on failure
};

// Runs the five reference trajectories (eta = 3, gamma = 1/3, Tol = 1e-8)
// and compares every tabulated iterate at 1e-9. Prints one line per case.
// Returns true when all pass.
bool run_reference_cases(std::ostream& out,
                         std::vector<ReferenceCaseResult>* results = nullptr);

}  // namespace indca

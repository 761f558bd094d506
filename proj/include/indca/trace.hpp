#pragma once

#include "indca/types.hpp"

namespace indca {

enum class Algorithm { InDCA1, InDCA2 };

enum class SolveStatus { ToleranceReached, MaxIterReached, Diverged };

// One iterate of an inertial DCA run. d is the inertial term used to produce
// x, i.e. gamma*(previous step); energy is f(x) + alpha*step_norm^2, the
// quantity that decreases along the iteration.
struct TraceRecord {
  int k = 0;
  Vector x;
  Vector d;
  double f_val = 0.0;
  double step_norm = 0.0;
  double energy = 0.0;
  double inclusion_residual = 0.0;
  IndexSet active;
};

using SolveTrace = std::vector<TraceRecord>;

}  // namespace indca

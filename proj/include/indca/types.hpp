#pragma once

#include <Eigen/Dense>
#include <vector>

namespace indca {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Constraint indices, 0-based and sorted ascending. Textual output (CLI,
// trace CSV) renders them 1-based to match the usual row numbering of
// {x | Ax >= b}.
using IndexSet = std::vector<int>;

}  // namespace indca

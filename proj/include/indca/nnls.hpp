#pragma once

#include "indca/types.hpp"

namespace indca {

struct NnlsResult {
  Vector coeffs;    // >= 0, one per column of G
  double residual;  // ||G coeffs - y||
};

// min ||G mu - y|| subject to mu >= 0 (Lawson-Hanson active set).
// G may have zero columns, in which case the residual is ||y||.
NnlsResult nnls(const Matrix& G, const Vector& y);

// Residual of the conic membership test  y in pos{columns of G}.
double conic_membership_residual(const Matrix& G, const Vector& y);

}  // namespace indca

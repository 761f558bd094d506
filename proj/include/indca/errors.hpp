#pragma once

#include <stdexcept>
#include <string>

namespace indca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InfeasibleConstraintSet : Error {
  using Error::Error;
};

struct EtaTooSmall : Error {
  EtaTooSmall(double eta, double bound)
      : Error("eta = " + std::to_string(eta) +
              " must be strictly greater than " + std::to_string(bound)),
        required_bound(bound) {}
  double required_bound;
};

struct InvalidGamma : Error {
  using Error::Error;
};

struct NonSymmetric : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct InfeasiblePoint : Error {
  using Error::Error;
};

struct TooManyConstraints : Error {
  using Error::Error;
};

struct EmptyFace : Error {
  using Error::Error;
};

struct NumericalFailure : Error {
  using Error::Error;
};

struct InfeasibleRegion : Error {
  using Error::Error;
};

struct CycleGuardExceeded : Error {
  using Error::Error;
};

struct VariantMismatch : Error {
  using Error::Error;
};

struct TraceTooShort : Error {
  using Error::Error;
};

struct NoComponents : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace indca

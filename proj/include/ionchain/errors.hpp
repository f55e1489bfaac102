#pragma once

#include <stdexcept>
#include <string>

namespace ionchain {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or argument values (CLI exit code 2).
struct ConfigInvalid : Error {
  using Error::Error;
};

/// Numerical failures (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

struct NonConvergence : NumericalError {
  using NumericalError::NumericalError;
};
struct NumericalFailure : NumericalError {
  using NumericalError::NumericalError;
};
struct BranchUnavailable : NumericalError {
  using NumericalError::NumericalError;
};
struct IonCollision : NumericalError {
  using NumericalError::NumericalError;
};
struct StepTooLarge : NumericalError {
  using NumericalError::NumericalError;
};
struct TruncationOverflow : NumericalError {
  using NumericalError::NumericalError;
};
struct FitDiverged : NumericalError {
  using NumericalError::NumericalError;
};
struct EmptyTrace : NumericalError {
  using NumericalError::NumericalError;
};

/// Filesystem failures (CLI exit code 4).
struct IoFailure : Error {
  using Error::Error;
};

} // namespace ionchain

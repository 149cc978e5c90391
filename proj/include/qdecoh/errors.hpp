#pragma once

#include <stdexcept>
#include <string>

namespace qdecoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failures of a numerical contract (tolerance, convergence, state validity).
/// The CLI maps every subclass to exit status 3.
struct NumericalError : Error {
    using Error::Error;
};

struct NonHermitian : NumericalError {
    using NumericalError::NumericalError;
};

struct NoConvergence : NumericalError {
    using NumericalError::NumericalError;
};

struct ToleranceNotMet : NumericalError {
    using NumericalError::NumericalError;
};

struct InvalidState : NumericalError {
    using NumericalError::NumericalError;
};

/// Raised when a dense operator would exceed the 1024-dimension cap.
struct DimensionTooLarge : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace qdecoh

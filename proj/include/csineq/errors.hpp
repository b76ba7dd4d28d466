#pragma once

#include <stdexcept>

namespace csineq {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Values or functions from different carriers were combined.
struct CarrierMismatchError : Error {
  using Error::Error;
};

/// A stated theorem hypothesis fails for the supplied function.
struct HypothesisViolationError : Error {
  using Error::Error;
};

/// Input outside the documented domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Requested enclosure precision unreachable within the iteration cap.
struct PrecisionError : Error {
  using Error::Error;
};

/// Operation not defined on this carrier (e.g. exact identities on intervals).
struct UnsupportedCarrierError : Error {
  using Error::Error;
};

/// Malformed or incompatible run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace csineq

#pragma once

#include <stdexcept>
#include <string>

namespace plie {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural misuse of the exterior algebra layer.
struct DimensionMismatchError : Error {
  using Error::Error;
};
struct TagMismatchError : Error {
  using Error::Error;
};
struct DegreeError : Error {
  using Error::Error;
};

// Malformed user input (documents, matrices, parameters).
struct InputError : Error {
  using Error::Error;
};

// Metric-geometry preconditions.
struct NotMilnorError : Error {
  using Error::Error;
};
struct ArgumentNotInSError : Error {
  using Error::Error;
};
struct FailedToConvergeError : Error {
  FailedToConvergeError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

struct UnknownEntryError : Error {
  using Error::Error;
};

}  // namespace plie

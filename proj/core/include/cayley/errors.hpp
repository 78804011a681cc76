#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on (n, k, r), a point index, or a degree was violated.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The requested object is too large to materialize under the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed (non-symmetric input, no convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley

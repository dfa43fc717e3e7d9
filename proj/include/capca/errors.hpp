#pragma once

#include <stdexcept>
#include <string>

namespace capca {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (range, shape, symmetry...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A neighborhood whose normalization radius (or a neighbor distance the
/// estimator divides by) is zero.
class DegenerateNeighborhood : public Error {
 public:
  using Error::Error;
};

/// The harness replaced more degenerate centers than its budget allows.
class ResampleLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace capca

#pragma once

#include <stdexcept>
#include <string>

namespace polyspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: non-finite numbers, out-of-domain points, bad q.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside the documented evaluation window.
class UnsupportedRange : public Error {
 public:
  using Error::Error;
};

/// A certification step (sign change, enclosure) failed. Never recovered.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was asked to certify with bounds that are too small.
class OracleInsufficient : public Error {
 public:
  using Error::Error;
};

/// An operation reached a state the theory rules out (e.g. a zero eigenvalue).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace polyspec

#pragma once

#include <stdexcept>
#include <string>

namespace qgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when inverting a zero Scalar or when a denominator vanishes at a
/// specialization point.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

/// Raised when a requested computation exceeds a configured size cutoff.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qgr

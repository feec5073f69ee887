#pragma once

#include <stdexcept>
#include <string>

namespace eoa {

// Raised for contract violations on inputs: bad parameters, malformed files,
// dimension mismatches. Verification failures are reported as values instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or dense-simulation cap was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace eoa

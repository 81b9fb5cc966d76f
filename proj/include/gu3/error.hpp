#pragma once

#include <stdexcept>
#include <string>

namespace gu3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed primes, unknown variants, corrupt matrices.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotSimilitude : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotInLattice : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PrecisionExceeded : public Error {
 public:
  using Error::Error;
};

// Memory / element caps, dense size limits.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace gu3

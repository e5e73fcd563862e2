#pragma once

#include <stdexcept>
#include <string>

namespace wonder {

// Error taxonomy shared by every module. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, dimension mismatch, unknown element name.
class InputError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured cap (elements, subsets) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Requested operation is not defined for this model.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug or an unproven corner.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace wonder

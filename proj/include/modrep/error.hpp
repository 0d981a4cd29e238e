#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad tables, inconsistent images, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace modrep

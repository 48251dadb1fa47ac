#pragma once

#include <stdexcept>

namespace pixcrypt {

// Base class for all library errors. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed container or file contents (bad magic, bad header, truncation).
struct FormatError : Error {
  using Error::Error;
};

// A precondition on an operation's arguments was violated.
struct ArgumentError : Error {
  using Error::Error;
};

// A bounded enumeration or exact computation was asked for beyond its bound.
struct CapacityError : Error {
  using Error::Error;
};

// Filesystem access failed.
struct IoError : Error {
  using Error::Error;
};

}  // namespace pixcrypt

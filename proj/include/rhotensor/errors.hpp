#pragma once

#include <stdexcept>
#include <string>

namespace rhotensor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family/rank combination that does not name a simple Lie algebra.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class NonDominantInput : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A configured cap (lattice points, rank, heavy types) would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Fixed-width arithmetic would have wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree, or a result violates an invariant
/// that holds for any correct implementation.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rhotensor

#pragma once

#include <stdexcept>
#include <string>

namespace parbb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of mismatched length (bit strings, instances, assignments).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds what an exhaustive routine is allowed to enumerate.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment, algorithm or objective configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an interface contract (e.g. information-flow rules).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace parbb

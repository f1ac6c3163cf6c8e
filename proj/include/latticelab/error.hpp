#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace latticelab {

/// Failure categories raised by the library. Each maps to one of the
/// documented error conditions of the public operations.
enum class ErrorKind {
  InvalidInput,
  NotAPoset,
  NotALattice,
  NoBounds,
  PreconditionViolated,
  NotAdmissible,
  BadParameters,
  RingMismatch,
  ZeroPolynomial,
  ZeroDivisor,
  ParseError,
  NotPureDifference,
  NotSaturatedInput,
  IntersectionMismatch,
  RingTooLarge,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latticelab

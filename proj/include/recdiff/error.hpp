#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recdiff {

enum class ErrorKind {
  MalformedConfig,
  InvalidRecurrence,
  InvalidInput,
  PreconditionViolation,
  PrecisionExhausted,
  NoDominantRoot,
  RootNotLargerThanOne,
  UnsupportedDegree,
  DivisionByZero,
  CutoffUnsafe,
  InvalidBelowThreshold,
  InvalidParameters,
};

std::string_view to_string(ErrorKind kind);

/// Every failure the library reports carries one of the kinds above; the CLI
/// maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by ball arithmetic when a decision cannot be made at the current
/// precision. Callers catch it and retry at a higher precision; it escapes as
/// PrecisionExhausted only once the cap is reached.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace recdiff

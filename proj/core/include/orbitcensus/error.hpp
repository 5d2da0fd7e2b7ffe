#pragma once

#include <stdexcept>
#include <string>

namespace orbitcensus {

// Exit statuses used by the command line front end.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  capacity = 2,
  validation = 3,
  numerical = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  [[nodiscard]] virtual auto exit_code() const noexcept -> ExitCode { return ExitCode::usage; }
};

/// A precondition on an argument was violated (out-of-range order, length mismatch, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but outside what the selected engine supports.
class CapacityError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] auto exit_code() const noexcept -> ExitCode override { return ExitCode::capacity; }
};

/// A mathematical identity that should hold did not hold within tolerance.
class ValidationError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] auto exit_code() const noexcept -> ExitCode override { return ExitCode::validation; }
};

/// A floating point result could not be certified (e.g. rounding residual too large).
class NumericalError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] auto exit_code() const noexcept -> ExitCode override { return ExitCode::numerical; }
};

/// Data required by an operation is absent from the object it was asked of.
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitcensus

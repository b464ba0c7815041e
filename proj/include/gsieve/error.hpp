#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsieve {

enum class ErrorCode {
  InvalidArgument,
  NotSPD,
  NonPositiveDeterminant,
  UnphysicalState,
  SingularSigma,
  SingularDiffusion,
  NotStable,
  SingularSystem,
  IntegrationFailure,
  BracketError,
  BoxTooSmall,
  IndexOutOfRange,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Process exit status the CLI reports for an error of this kind:
/// 1 usage/parse, 2 physics constraint, 3 numerical failure.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Integrator failure carrying the simulation time at which it happened.
class IntegrationError : public Error {
 public:
  IntegrationError(double time, const std::string& what)
      : Error(ErrorCode::IntegrationFailure, what + " at t=" + std::to_string(time)),
        time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace gsieve

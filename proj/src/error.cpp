#include "gsieve/error.hpp"

namespace gsieve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSPD: return "NotSPD";
    case ErrorCode::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorCode::UnphysicalState: return "UnphysicalState";
    case ErrorCode::SingularSigma: return "SingularSigma";
    case ErrorCode::SingularDiffusion: return "SingularDiffusion";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
    case ErrorCode::BracketError: return "BracketError";
    case ErrorCode::BoxTooSmall: return "BoxTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::BracketError:
    case ErrorCode::BoxTooSmall:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::MalformedInput:
      return 1;
    case ErrorCode::NotSPD:
    case ErrorCode::NonPositiveDeterminant:
    case ErrorCode::UnphysicalState:
    case ErrorCode::SingularSigma:
    case ErrorCode::SingularDiffusion:
    case ErrorCode::NotStable:
      return 2;
    case ErrorCode::SingularSystem:
    case ErrorCode::IntegrationFailure:
      return 3;
  }
  return 1;
}

}  // namespace gsieve

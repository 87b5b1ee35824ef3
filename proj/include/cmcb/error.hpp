#pragma once

#include <stdexcept>
#include <string>

namespace cmcb {

/// Reason codes carried by every cmcb::Error.
enum class ErrorCode {
  DomainError,
  NonPositiveWarp,
  QuadratureFailure,
  DerivativeMismatch,
  InvalidDimension,
  SingularBasis,
  MissingZeroMode,
  NonMonotone,
  BoundExceedsData,
  ConvergenceFailure,
  ZeroModeQueried,
  DegeneratePoint,
  DegenerateEndpoint,
  SpectrumBoundExceeded,
  MissingFiberCurvature,
  InvalidMass,
  RootNotFound,
  UnknownModel,
  InvalidParams,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonPositiveWarp: return "NonPositiveWarp";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::DerivativeMismatch: return "DerivativeMismatch";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::MissingZeroMode: return "MissingZeroMode";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::BoundExceedsData: return "BoundExceedsData";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ZeroModeQueried: return "ZeroModeQueried";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::DegenerateEndpoint: return "DegenerateEndpoint";
    case ErrorCode::SpectrumBoundExceeded: return "SpectrumBoundExceeded";
    case ErrorCode::MissingFiberCurvature: return "MissingFiberCurvature";
    case ErrorCode::InvalidMass: return "InvalidMass";
    case ErrorCode::RootNotFound: return "RootNotFound";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace cmcb

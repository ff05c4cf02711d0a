#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcg_paradox {

enum class ErrorCode {
  BadVertexCount,
  BadVertexLabel,
  EdgeTooSmall,
  EdgeTooLarge,
  ContainmentViolation,
  DuplicateEdge,
  MissingVertexColor,
  TooLarge,
  EvenN,
  BadDim,
  BadDigits,
  NotNormalized,
  ZeroProbability,
  WrongShape,
  BadVisibility,
  DimensionMismatch,
  BadPlan,
  AugmentedUnsupported,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadVertexCount: return "BadVertexCount";
    case ErrorCode::BadVertexLabel: return "BadVertexLabel";
    case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorCode::EdgeTooLarge: return "EdgeTooLarge";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MissingVertexColor: return "MissingVertexColor";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::BadDim: return "BadDim";
    case ErrorCode::BadDigits: return "BadDigits";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroProbability: return "ZeroProbability";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::BadVisibility: return "BadVisibility";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadPlan: return "BadPlan";
    case ErrorCode::AugmentedUnsupported: return "AugmentedUnsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every library operation. The code is stable and
/// machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcg_paradox

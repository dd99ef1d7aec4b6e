#pragma once

#include <stdexcept>
#include <string>

namespace projlab {

enum class ErrorCode {
  NonSquare,
  ShapeMismatch,
  ZeroPolynomial,
  ZeroVector,
  AllMinorsZero,
  WitnessReconstructionFailed,
  SingularMatrix,
  MixedDelta,
  EmptyCell,
  LadderTooShort,
  InfeasibleExponent,
  TooFewScales,
  ParseError,
  EmptyVectorError,
  IoError,
  InvariantViolation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::AllMinorsZero: return "AllMinorsZero";
    case ErrorCode::WitnessReconstructionFailed: return "WitnessReconstructionFailed";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::MixedDelta: return "MixedDelta";
    case ErrorCode::EmptyCell: return "EmptyCell";
    case ErrorCode::LadderTooShort: return "LadderTooShort";
    case ErrorCode::InfeasibleExponent: return "InfeasibleExponent";
    case ErrorCode::TooFewScales: return "TooFewScales";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyVectorError: return "EmptyVector";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace projlab

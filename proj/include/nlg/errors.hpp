#pragma once

#include <stdexcept>
#include <string>

namespace nlg {

enum class ErrorCode {
  NonNormalizedDistribution,
  NegativeProbability,
  IndexOutOfRange,
  NotXorGame,
  ParseError,
  SchemaViolation,
  EvenOrSmallN,
  InvalidTriples,
  EmptyGraph,
  TooLarge,
  SearchSpaceTooLarge,
  TooManyVectors,
  DimensionMismatch,
  InvalidMeasurement,
  NotBinaryGame,
  NotPerfect,
  NumericallyAmbiguous,
  NonHermitian,
  EpsilonOutOfRange,
  ResampleLimitExceeded,
  DomainError,
  InvalidArgument,
  Overflow,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonNormalizedDistribution: return "NonNormalizedDistribution";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotXorGame: return "NotXorGame";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::EvenOrSmallN: return "EvenOrSmallN";
    case ErrorCode::InvalidTriples: return "InvalidTriples";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::TooManyVectors: return "TooManyVectors";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidMeasurement: return "InvalidMeasurement";
    case ErrorCode::NotBinaryGame: return "NotBinaryGame";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::NumericallyAmbiguous: return "NumericallyAmbiguous";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::ResampleLimitExceeded: return "ResampleLimitExceeded";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace nlg

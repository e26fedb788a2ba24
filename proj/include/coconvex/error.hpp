#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coconvex {

enum class ErrorCode {
  DimensionMismatch,
  EmptyInput,
  InvalidArgument,
  NotFullDimensional,
  ContainsLine,
  InteriorCertificateFailed,
  SectionNotCompact,
  NonpositiveOffset,
  ApexOutsideCone,
  ComplementNotBounded,
  BodyEmpty,
  BodyZeroVolume,
  ConeMismatch,
  NonpositiveScale,
  LambdaOutOfRange,
  HyperplaneTooLow,
  PrecisionExhausted,
  ProjectionMismatch,
  DegenerateBox,
  RetriesExhausted,
  SyntaxError,
  SchemaError,
  UnknownName,
  UnsupportedDimension,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` is the stable,
// machine-checkable part and `what()` carries the human-readable context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}
  explicit Error(ErrorCode code) : Error(code, "") {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coconvex

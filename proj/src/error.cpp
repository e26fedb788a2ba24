#include "coconvex/error.hpp"

namespace coconvex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::ContainsLine: return "ContainsLine";
    case ErrorCode::InteriorCertificateFailed: return "InteriorCertificateFailed";
    case ErrorCode::SectionNotCompact: return "SectionNotCompact";
    case ErrorCode::NonpositiveOffset: return "NonpositiveOffset";
    case ErrorCode::ApexOutsideCone: return "ApexOutsideCone";
    case ErrorCode::ComplementNotBounded: return "ComplementNotBounded";
    case ErrorCode::BodyEmpty: return "BodyEmpty";
    case ErrorCode::BodyZeroVolume: return "BodyZeroVolume";
    case ErrorCode::ConeMismatch: return "ConeMismatch";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::HyperplaneTooLow: return "HyperplaneTooLow";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::ProjectionMismatch: return "ProjectionMismatch";
    case ErrorCode::DegenerateBox: return "DegenerateBox";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "Unknown";
}

}  // namespace coconvex

#include "scc/error.hpp"

namespace scc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::NotCentered: return "NotCentered";
    case ErrorCode::TooManyFacets: return "TooManyFacets";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GeneratorFailure: return "GeneratorFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace scc

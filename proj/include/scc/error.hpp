#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scc {

enum class ErrorCode {
  DegenerateInput,
  Unbounded,
  OriginNotInterior,
  NotAFace,
  NotComplementary,
  NotCentered,
  TooManyFacets,
  CapExceeded,
  DimensionMismatch,
  NonSquare,
  EmptyInput,
  IndexOutOfRange,
  GeneratorFailure,
  ParseError,
  // Raised when a proved identity fails to hold; always a library bug.
  InvariantViolation,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scc

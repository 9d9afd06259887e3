#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gap {

enum class ErrorCode {
  DimensionMismatch,
  DiagonalNotInfinite,
  SymmetryViolation,
  NegativeCost,
  NegativeInfinity,
  InvalidPoint,
  Overflow,
  SelfLoop,
  AllInfinite,
  DegenerateRange,
  InvalidCycle,
  InvalidPermutation,
  RankOutOfRange,
  NotAnchoredAtN,
  SizeMismatch,
  CapExceeded,
  DegenerateDenominator,
  InvalidArgument,
  SubtourError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. The code is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gap

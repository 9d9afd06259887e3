#include "gap/error.hpp"

namespace gap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DiagonalNotInfinite: return "DiagonalNotInfinite";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::NegativeInfinity: return "NegativeInfinity";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::AllInfinite: return "AllInfinite";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotAnchoredAtN: return "NotAnchoredAtN";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SubtourError: return "SubtourError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gap

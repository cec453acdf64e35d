#include "mcgh/error.hpp"

namespace mcgh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownBoundary: return "UnknownBoundary";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::InvalidOp: return "InvalidOp";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::UnknownPuncture: return "UnknownPuncture";
    case ErrorCode::WrongGenus: return "WrongGenus";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::InfiniteComplementViolation:
      return "InfiniteComplementViolation";
    case ErrorCode::WrongExhaustion: return "WrongExhaustion";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::NotEscaping: return "NotEscaping";
    case ErrorCode::InsufficientStages: return "InsufficientStages";
    case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)),
      index_(index) {}

}  // namespace mcgh

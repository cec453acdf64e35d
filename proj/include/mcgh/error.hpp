#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcgh {

enum class ErrorCode {
  UnknownBoundary,
  LabelCollision,
  InvalidLabel,
  InvalidOp,
  InvalidSurface,
  UnknownPuncture,
  WrongGenus,
  Unsupported,
  BasisMismatch,
  Overflow,
  NotPure,
  InvalidWord,
  InfiniteComplementViolation,
  WrongExhaustion,
  RelationViolation,
  NotEscaping,
  InsufficientStages,
  IncompleteAssignment,
  ParseError,
  Usage,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `index` carries the
// offending position (e.g. the gluing op) when one is meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> index_;
};

}  // namespace mcgh

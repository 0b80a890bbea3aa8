#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratpull {

enum class ErrorKind {
  ZeroDenominator,
  NonSquare,
  Singular,
  DimensionMismatch,
  DimensionCap,
  NotZPattern,
  InternalInconsistency,
  SignViolation,
  DisconnectedConfiguration,
  NotMMatrix,
  NegativeLambda,
  NotSymmetric,
  NotNegativeDefinite,
  NoRationalPullback,
  InvalidGraph,
  ParseError,
  InvariantViolation,
  UnknownExample,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind plus, where it makes
/// sense, the offending matrix position or index.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> row = std::nullopt,
        std::optional<std::size_t> col = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> col() const noexcept { return col_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

}  // namespace ratpull

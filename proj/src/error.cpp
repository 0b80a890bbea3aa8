#include "ratpull/error.hpp"

namespace ratpull {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::NotZPattern: return "NotZPattern";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::SignViolation: return "SignViolation";
    case ErrorKind::DisconnectedConfiguration: return "DisconnectedConfiguration";
    case ErrorKind::NotMMatrix: return "NotMMatrix";
    case ErrorKind::NegativeLambda: return "NegativeLambda";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::NoRationalPullback: return "NoRationalPullback";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> row, std::optional<std::size_t> col)
    : std::runtime_error(message), kind_(kind), row_(row), col_(col) {}

}  // namespace ratpull

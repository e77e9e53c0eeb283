#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncdr {

/// Domain failure kinds. The CLI prints `name()` on stderr and exits with 1.
enum class ErrorCode {
  ZeroParameter,
  AlgebraMismatch,
  NotInvertible,
  WrongDimension,
  DimensionMismatch,
  Singular,
  NotQuaternionBlock,
  NotRepresentable,
  DegreeTooLarge,
  NonConvergent,
  ZeroDirection,
  IndexOutOfRange,
  UnboundSymbol,
  NoSolution,
  OrderExceeded,
  RangeError,
  InvalidAlgebra,
  ParseError,
  InvalidConfig,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotQuaternionBlock: return "NotQuaternionBlock";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnboundSymbol: return "UnboundSymbol";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ncdr

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace severi {

// Domain error kinds. The CLI reports these by name, so the spelling of
// error_name() is part of the external interface.
enum class ErrorCode {
  InvalidArgument,
  RankDeficient,
  OutOfRange,
  BudgetExceeded,
  NotSpanning,
  ShapeMismatch,
  IndexOutOfRange,
  InvalidMove,
  PrecisionExhausted,
  PerfectPower,
  SyntaxError,
  NotMonic,
  NotInWm,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::PerfectPower: return "PerfectPower";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NotInWm: return "NotInWm";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

  /// Byte offset into the parsed text, set for SyntaxError.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace severi

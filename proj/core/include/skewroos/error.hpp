#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewroos {

enum class ErrorCode {
  InvalidInput,
  NotPrimePower,
  DegreeMismatch,
  NotPrimitive,
  BadEmbedding,
  ElementNotInField,
  ZeroElement,
  NoSolution,
  RingMismatch,
  DivisionByZero,
  NotMuClosed,
  NotNormal,
  NotADivisor,
  RankDeficient,
  MalformedCertificate,
  EmptyOrFullSet,
  Unsupported,
  TooLarge,
  ZeroCode,
  CoefficientOutsideF,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Library exception. `module` names the component that raised it
/// ("galois-tower", "skew-poly", ...) so the CLI can print qualified codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string_view module, const std::string& what)
      : std::runtime_error(what), code_(code), module_(module) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view module() const noexcept { return module_; }

  /// Internal consistency failures (exit status 2 in the CLI).
  bool is_invariant_violation() const noexcept {
    return code_ == ErrorCode::InvariantViolation || code_ == ErrorCode::CoefficientOutsideF;
  }

 private:
  ErrorCode code_;
  std::string_view module_;
};

}  // namespace skewroos

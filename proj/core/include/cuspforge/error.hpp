#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuspforge {

enum class ErrorKind {
  InvalidArgument,
  NonUnitGenerator,
  NotADivisor,
  NotPrimitive,
  NotCoprime,
  NotIrregular,
  PNotDividingM,
  LevelMismatch,
  NotExactDivisor,
  NotNormalizing,
  BadP,
  LevelNotDivisible,
  BadGenus,
  GenusTooSmall,
  NotPrime,
  InconsistentGapCount,
  RCongruentZero,
  TruncationTooSmall,
  NonzeroDegree,
  NonIntegralOrder,
  // Internal invariant violations. These indicate a bug, never bad input.
  NonIntegralGenus,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `internal()` separates broken
/// invariants from violated preconditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  bool internal() const noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace cuspforge

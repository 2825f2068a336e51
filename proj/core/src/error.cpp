#include "cuspforge/error.hpp"

namespace cuspforge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonUnitGenerator: return "NonUnitGenerator";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotIrregular: return "NotIrregular";
    case ErrorKind::PNotDividingM: return "PNotDividingM";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::NotExactDivisor: return "NotExactDivisor";
    case ErrorKind::NotNormalizing: return "NotNormalizing";
    case ErrorKind::BadP: return "BadP";
    case ErrorKind::LevelNotDivisible: return "LevelNotDivisible";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::InconsistentGapCount: return "InconsistentGapCount";
    case ErrorKind::RCongruentZero: return "RCongruentZero";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NonzeroDegree: return "NonzeroDegree";
    case ErrorKind::NonIntegralOrder: return "NonIntegralOrder";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

bool Error::internal() const noexcept {
  return kind_ == ErrorKind::NonIntegralGenus ||
         kind_ == ErrorKind::InvariantViolation;
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cuspforge

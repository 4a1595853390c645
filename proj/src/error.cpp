#include "sbundle/error.hpp"

#include <algorithm>

namespace sbundle {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MixedCardinality: return "MixedCardinality";
    case ErrorCode::NonPositiveLabel: return "NonPositiveLabel";
    case ErrorCode::RepeatedVertex: return "RepeatedVertex";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::VertexInUse: return "VertexInUse";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DistanceViolation: return "DistanceViolation";
    case ErrorCode::NonSimplicialQuotient: return "NonSimplicialQuotient";
    case ErrorCode::InvalidPairing: return "InvalidPairing";
    case ErrorCode::InfeasibleVertexCount: return "InfeasibleVertexCount";
    case ErrorCode::NotTwoStacks: return "NotTwoStacks";
    case ErrorCode::PairingNotOnTops: return "PairingNotOnTops";
    case ErrorCode::AlreadyOrientable: return "AlreadyOrientable";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::NotFlippable: return "NotFlippable";
    case ErrorCode::ScheduleInvalid: return "ScheduleInvalid";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::ComplexMismatch: return "ComplexMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace sbundle

#ifndef SBUNDLE_ERROR_HPP
#define SBUNDLE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbundle {

// Every domain failure raised by the library. The numeric values are part of
// the C API (sb_status) and must stay stable.
enum class ErrorCode : int {
  Ok = 0,
  EmptyInput = 1,
  MixedCardinality = 2,
  NonPositiveLabel = 3,
  RepeatedVertex = 4,
  LengthMismatch = 5,
  NotAFace = 6,
  NotAFacet = 7,
  VertexInUse = 8,
  UnknownVertex = 9,
  Disconnected = 10,
  DistanceViolation = 11,
  NonSimplicialQuotient = 12,
  InvalidPairing = 13,
  InfeasibleVertexCount = 14,
  NotTwoStacks = 15,
  PairingNotOnTops = 16,
  AlreadyOrientable = 17,
  NotPseudomanifold = 18,
  InvalidMove = 19,
  NotFlippable = 20,
  ScheduleInvalid = 21,
  TargetOutOfRange = 22,
  ComplexMismatch = 23,
  ParseError = 24,
  Overflow = 25,
  InvalidArgument = 26,
  InvariantViolation = 27,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse/format errors carry the 1-based input line they refer to.
class LineError : public Error {
 public:
  LineError(ErrorCode code, std::size_t line, const std::string& detail)
      : Error(code, "line " + std::to_string(line) + ": " + detail), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Checked 64-bit arithmetic; all face counts go through these.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace sbundle

#endif  // SBUNDLE_ERROR_HPP

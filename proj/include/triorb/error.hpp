#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triorb {

// Machine-readable failure reasons. The CLI prints the name verbatim.
enum class ErrorCode {
  kNotPrime,
  kReducibleModulus,
  kNoPrimitiveElement,
  kDivisionByZero,
  kFieldMismatch,
  kNotADivisor,
  kWrongLength,
  kSingular,
  kDimensionMismatch,
  kBoundExceeded,
  kZeroPolynomial,
  kWNotProper,
  kEvenCharacteristic,
  kCenterMismatch,
  kNoTraceOneElement,
  kNotPrimitiveDivisor,
  kTooLarge,
  kNotSpecialQuotient,
  kDegenerateForm,
  kOddDimension,
  kGroupMismatch,
  kInvalidPair,
  kBudgetExhausted,
  kLiftFailure,
  kUnknownFamily,
  kConstructionFailed,
  kInvalidArgument,
  kParseError,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace triorb

#include "triorb/error.hpp"

namespace triorb {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kNoPrimitiveElement: return "NoPrimitiveElement";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kWNotProper: return "WNotProper";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kCenterMismatch: return "CenterMismatch";
    case ErrorCode::kNoTraceOneElement: return "NoTraceOneElement";
    case ErrorCode::kNotPrimitiveDivisor: return "NotPrimitiveDivisor";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotSpecialQuotient: return "NotSpecialQuotient";
    case ErrorCode::kDegenerateForm: return "DegenerateForm";
    case ErrorCode::kOddDimension: return "OddDimension";
    case ErrorCode::kGroupMismatch: return "GroupMismatch";
    case ErrorCode::kInvalidPair: return "InvalidPair";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kLiftFailure: return "LiftFailure";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Internal";
}

}  // namespace triorb

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specz {

enum class ErrorCode {
  DenominatorVanishes,
  ZeroInput,
  LengthMismatch,
  RingMismatch,
  BudgetExceeded,
  ZeroIdeal,
  UnitIdeal,
  NotZeroDimensional,
  NotAComplex,
  NotHomogeneous,
  ZeroModule,
  DegenerateGrade,
  NotASOP,
  BadPoint,
  ExhaustedSampling,
  NotUnmixedDeclared,
  SyntaxError,
  UnknownName,
  ArityMismatch,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::DegenerateGrade: return "DegenerateGrade";
    case ErrorCode::NotASOP: return "NotASOP";
    case ErrorCode::BadPoint: return "BadPoint";
    case ErrorCode::ExhaustedSampling: return "ExhaustedSampling";
    case ErrorCode::NotUnmixedDeclared: return "NotUnmixedDeclared";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the check harness) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace specz

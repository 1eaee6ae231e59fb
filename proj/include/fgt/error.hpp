#ifndef FGT_ERROR_HPP_
#define FGT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgt {

enum class ErrorCode {
  NotPrime,
  UnsupportedExtension,
  DivisionByZero,
  DegreeMismatch,
  FieldMismatch,
  Singular,
  BudgetExceeded,
  InvalidElement,
  NotAutomorphism,
  ActionInconsistent,
  NotNormal,
  NotSubgroup,
  UnknownConstructor,
  InvalidParameters,
  ParseError,
  NotApplicable,
  NotSolvable,
  UnknownClaim,
  Internal
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::ActionInconsistent: return "ActionInconsistent";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::UnknownConstructor: return "UnknownConstructor";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// All library failures are reported through this type; `code()` tells the
/// caller which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fgt

#endif  // FGT_ERROR_HPP_

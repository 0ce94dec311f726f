#include "symcan/error.hpp"

namespace symcan {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kFieldMismatch: return "field-mismatch";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kSingularBranch: return "singular-branch";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kUnsupportedEnumeration: return "unsupported-enumeration";
    case ErrorCode::kUnsupportedSupport: return "unsupported-support";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kIrrationalFiber: return "irrational-fiber";
    case ErrorCode::kNotApplicable: return "not-applicable";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kOutOfScope: return "out-of-scope";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown";
}

}  // namespace symcan

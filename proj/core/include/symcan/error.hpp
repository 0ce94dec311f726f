#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symcan {

enum class ErrorCode {
  kFieldMismatch,
  kDivisionByZero,
  kSingularBranch,
  kValidation,
  kUnsupportedEnumeration,
  kUnsupportedSupport,
  kOutOfRange,
  kIrrationalFiber,
  kNotApplicable,
  kBudgetExceeded,
  kOutOfScope,
  kParse,
};

/// Stable machine-readable name, e.g. "field-mismatch".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symcan

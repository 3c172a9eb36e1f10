#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quasibraid {

enum class ErrorCode {
  dimension_mismatch,
  invalid_argument,
  singular_configuration,
  not_idempotent,
  flip_undefined,
  budget_exceeded,
  parse_error,
};

std::string_view to_string(ErrorCode code);

// All domain failures raised by the library carry a stable machine-readable
// code; the CLI maps them onto `{code, message}` error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quasibraid

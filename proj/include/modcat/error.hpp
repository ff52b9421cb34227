#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modcat {

enum class ErrorKind {
  InvalidOrder,
  OrderTooLarge,
  DivisionByZero,
  NotAUnit,
  SchemaViolation,
  NotFusionIntegral,
  DegenerateS,
  NotFound,
  NotGaloisStable,
  NotGaloisSymmetric,
  BadLevel,
  NotModular,
  NotTabulated,
  OutOfRange,
  NotApplicable,
  InvalidFamily,
  InvalidParameters,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` is stable and
// is what callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace modcat

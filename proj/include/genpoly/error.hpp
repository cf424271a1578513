#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genpoly {

enum class ErrorCode {
  PoleAtEvaluationPoint,
  DivisionByZero,
  InexactDivision,
  NotAPolynomial,
  NonInvertibleConstantTerm,
  ConstantTermNotOne,
  ConstantTermNotZero,
  NonPolynomialCoefficient,
  NonPolynomialResult,
  DegreeBoundViolated,
  RouteMismatch,
  NonIntegralMahlerCoefficient,
  ConstantTermMismatch,
  BudgetExceeded,
  IdentityViolated,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace genpoly

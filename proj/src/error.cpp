#include "genpoly/error.hpp"

namespace genpoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotAPolynomial: return "NotAPolynomial";
    case ErrorCode::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::ConstantTermNotZero: return "ConstantTermNotZero";
    case ErrorCode::NonPolynomialCoefficient: return "NonPolynomialCoefficient";
    case ErrorCode::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorCode::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorCode::RouteMismatch: return "RouteMismatch";
    case ErrorCode::NonIntegralMahlerCoefficient: return "NonIntegralMahlerCoefficient";
    case ErrorCode::ConstantTermMismatch: return "ConstantTermMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace genpoly

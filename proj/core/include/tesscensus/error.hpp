#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tesscensus {

/// Classifies every failure the library can report. The CLI prints the
/// kind verbatim so scripts can match on it.
enum class ErrorKind {
  InvalidArgument,
  ZeroPolynomial,
  DivisionByZero,
  PoleAtOrigin,
  DimensionMismatch,
  SingularSystem,
  UndeclaredClass,
  NonIntegerCoefficient,
  InconsistentConfiguration,
  BudgetExceeded,
  InsufficientData,
  RootOutsideAssumptions,
  UnsupportedGeometry,
  NumericalInconsistency,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::ZeroPolynomial: return "zero_polynomial";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::PoleAtOrigin: return "pole_at_origin";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::SingularSystem: return "singular_system";
    case ErrorKind::UndeclaredClass: return "undeclared_class";
    case ErrorKind::NonIntegerCoefficient: return "non_integer_coefficient";
    case ErrorKind::InconsistentConfiguration: return "inconsistent_configuration";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::InsufficientData: return "insufficient_data";
    case ErrorKind::RootOutsideAssumptions: return "root_outside_assumptions";
    case ErrorKind::UnsupportedGeometry: return "unsupported_geometry";
    case ErrorKind::NumericalInconsistency: return "numerical_inconsistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tesscensus

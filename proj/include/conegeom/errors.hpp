#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conegeom {

enum class ErrorKind {
  NonSmoothBody,
  SingularHessian,
  DegenerateBody,
  QuadratureBudgetExceeded,
  NonFiniteIntegrand,
  SingularMatrix,
  OffBoundary,
  UndefinedCurvature,
  DomainError,
  ExcludedExponent,
  DimensionMismatch,
  FitUnreliable,
  PolarNotInCatalog,
  ExponentTooSmall,
  OutOfRange,
  RootFindFailure,
  OptimizationFailure,
  UnsupportedBody,
  BudgetExceeded,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Budget failures map to exit status 2, everything else is a check failure.
  bool is_budget_failure() const noexcept {
    return kind_ == ErrorKind::QuadratureBudgetExceeded || kind_ == ErrorKind::BudgetExceeded;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

}  // namespace conegeom

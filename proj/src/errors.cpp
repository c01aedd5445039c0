#include "conegeom/errors.hpp"

namespace conegeom {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSmoothBody: return "NonSmoothBody";
    case ErrorKind::SingularHessian: return "SingularHessian";
    case ErrorKind::DegenerateBody: return "DegenerateBody";
    case ErrorKind::QuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorKind::NonFiniteIntegrand: return "NonFiniteIntegrand";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::OffBoundary: return "OffBoundary";
    case ErrorKind::UndefinedCurvature: return "UndefinedCurvature";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ExcludedExponent: return "ExcludedExponent";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FitUnreliable: return "FitUnreliable";
    case ErrorKind::PolarNotInCatalog: return "PolarNotInCatalog";
    case ErrorKind::ExponentTooSmall: return "ExponentTooSmall";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RootFindFailure: return "RootFindFailure";
    case ErrorKind::OptimizationFailure: return "OptimizationFailure";
    case ErrorKind::UnsupportedBody: return "UnsupportedBody";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace conegeom

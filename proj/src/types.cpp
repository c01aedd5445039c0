#include "conegeom/types.hpp"

#include <cmath>

#include "conegeom/errors.hpp"

namespace conegeom {

UnitDirection::UnitDirection(Vec v) : v_(std::move(v)) {
  const double nrm = v_.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) fail(ErrorKind::DomainError, "direction must be a nonzero finite vector");
  v_ /= nrm;
  // a second pass brings the norm to within an ulp or two
  v_ /= v_.norm();
}

UnitDirection UnitDirection::axis(int n, int i) {
  if (i < 0 || i >= n) fail(ErrorKind::DimensionMismatch, "axis index out of range");
  Vec e = Vec::Zero(n);
  e[i] = 1.0;
  return UnitDirection(std::move(e), 0);
}

UnitDirection UnitDirection::angle(double a) {
  Vec e(2);
  e << std::cos(a), std::sin(a);
  return UnitDirection(std::move(e));
}

}  // namespace conegeom

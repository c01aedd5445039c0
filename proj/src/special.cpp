#include "conegeom/special.hpp"

#include <cmath>
#include <numbers>

#include "conegeom/errors.hpp"

namespace conegeom {

double digamma(double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0 && std::floor(x) == x) fail(ErrorKind::DomainError, "digamma has poles at non-positive integers");
  if (x < 0.0) {
    // ψ(1 - x) - ψ(x) = π cot(πx)
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double z = 1.0 / (x * x);
  // Bernoulli terms B_2k/(2k x^{2k}) through k = 7
  const double series =
      z * (1.0 / 12 - z * (1.0 / 120 - z * (1.0 / 252 - z * (1.0 / 240 - z * (1.0 / 132 - z * (691.0 / 32760 - z / 12))))));
  return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace conegeom

#pragma once

namespace conegeom {

/// ψ = Γ'/Γ by upward recurrence to x ≥ 10 and the asymptotic series;
/// reflection for negative non-integers.
double digamma(double x);

}  // namespace conegeom

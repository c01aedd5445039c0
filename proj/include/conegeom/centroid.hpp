#pragma once

#include <utility>
#include <vector>

#include "conegeom/body.hpp"
#include "conegeom/limit_fit.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

/// log ∫_K |⟨x, θ⟩|^p dx via ∫_K |⟨x,θ⟩|^p dx = (1/(n+p)) ∫ ρ^{n+p} |⟨ω,θ⟩|^p dσ(ω),
/// evaluated in log space with breakpoints around the peak at large p.
double zp_log_moment(const ConvexBody& body, double p, const Vec& theta);

/// h_{Z_p(K)}(θ) for a volume-one body.
double zp_support(const ConvexBody& body, double p, const UnitDirection& theta, const QuadratureConfig& cfg = {});

/// Support function of Z_p(K) for a fixed base body.
class CentroidBodyHandle {
 public:
  CentroidBodyHandle(BodyPtr base, double p, const QuadratureConfig& cfg = {});
  const BodyPtr& base() const { return base_; }
  double exponent() const { return p_; }
  double support(const UnitDirection& theta) const;

 private:
  BodyPtr base_;
  double p_;
  QuadratureConfig cfg_;
};

/// |Z_p°(K)| = (1/n) ∫ h_{Z_p}^{-n} dσ.
double zp_polar_volume(const ConvexBody& body, double p, const QuadratureConfig& cfg = {});
/// Same, with the sphere-rule error estimate.
IntegralResult zp_polar_volume_integral(const ConvexBody& body, double p, const QuadratureConfig& cfg = {});
/// |Z_p°(K)| - |K°| from one integrand, so the difference keeps its digits.
double zp_polar_volume_gap(const ConvexBody& body, double p, const QuadratureConfig& cfg = {});

/// ∫_K x xᵀ dx.
Mat second_moment_matrix(const ConvexBody& body, const QuadratureConfig& cfg = {});
/// L_K = (|Z_2(K)|/|B_2^n|)^{1/n} for volume-one K.
double isotropic_constant(const ConvexBody& body, const QuadratureConfig& cfg = {});
/// |Z_p(K)|^{1/n} / (sqrt(p/(n+p)) L_K), reported only (n = 2).
double inverse_lyz_ratio(const ConvexBody& body, double p, const QuadratureConfig& cfg = {});

/// p = 2^6 .. 2^14.
std::vector<double> default_centroid_grid();

struct Theorem1First {
  LimitFit fit;
  double target;  // (n(n+1)/2)|K°|
  double polar_volume;
};
/// Fits s(p) = (p/log p)(|Z_p°| - |K°|).
Theorem1First theorem1_first_limit(const BodyPtr& body, const std::vector<double>& grid,
                                   const QuadratureConfig& cfg = {}, const FitOptions& opts = {},
                                   const FitModel& model = FitModel::centroid_first());

struct Theorem1Second {
  LimitFit fit;
  double rhs_integral;    // -(1/2)∫ h^{-n} log(2^{n+1} π^{n-1} h^{n+1} f) dσ
  double rhs_omega_form;  // -(|K°|/2) log(2^{n(n+1)} π^{n(n-1)} Ω_K)
  double forms_residual;  // |rhs_integral - rhs_omega_form|
  double omega_from_fit;  // Ω_K implied by the extrapolated limit
  double polar_volume;
};
/// Fits s(p) = p(|Z_p°| - |K°| - (n(n+1) log p / 2p)|K°|) and evaluates both right-hand sides.
Theorem1Second theorem1_second_limit(const BodyPtr& body, const std::vector<double>& grid,
                                     const QuadratureConfig& cfg = {}, const FitOptions& opts = {},
                                     const FitModel& model = FitModel::centroid_second());
/// The two right-hand sides only, no extrapolation.
std::pair<double, double> theorem1_rhs(const BodyPtr& body, const QuadratureConfig& cfg = {});

/// t with vol{x ∈ K : |⟨x,θ⟩| ≤ t} = 1 - δ, for volume-one K.
double floating_support(const ConvexBody& body, double delta, const UnitDirection& theta,
                        const QuadratureConfig& cfg = {});

struct SandwichResult {
  std::vector<double> deltas;
  std::vector<std::vector<double>> ratios;  // [delta][direction]
  double min_ratio;
  double max_ratio;
};
/// h_{K_δ}(θ) / h_{Z_{log(1/δ)}(K)}(θ) over the grids.
SandwichResult sandwich_ratios(const ConvexBody& body, const std::vector<double>& deltas,
                               const std::vector<UnitDirection>& directions, const QuadratureConfig& cfg = {});
std::vector<double> default_delta_grid();
/// count directions equally spaced on the unit circle.
std::vector<UnitDirection> circle_directions(int count);

/// Λ*_K(x) = sup_y ⟨x,y⟩ - log ∫_K e^{⟨z,y⟩} dz for volume-one K, n ≤ 3.
double log_laplace_dual(const ConvexBody& body, const Vec& x);
/// Largest s with Λ*_K(sθ) ≤ r.
double log_laplace_level_support(const ConvexBody& body, double level, const UnitDirection& theta);

/// (f'(t), f''(t)) for f(t) = |K ∩ {⟨x,θ⟩ = t}|, n ∈ {2, 3}.
std::pair<double, double> section_derivatives(const ConvexBody& body, const UnitDirection& theta, double t);

/// Maximizer of t^p f(t) on (0, h(θ)).
double tp_maximizer(const ConvexBody& body, const UnitDirection& theta, double p);

}  // namespace conegeom

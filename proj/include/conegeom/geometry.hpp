#pragma once

#include <functional>
#include <vector>

#include "conegeom/body.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

struct BoundaryPoint {
  Vec x;
  Vec normal;
  double gauss_curvature;
  double support_value;  // ⟨x, N(x)⟩
};

/// Boundary point whose outer normal is u.
BoundaryPoint boundary_point_with_normal(const ConvexBody& body, const UnitDirection& u);
/// Boundary point ρ(d)·d.
BoundaryPoint boundary_point_along(const ConvexBody& body, const UnitDirection& d);

/// f_K(u) = 1/κ at the boundary point with normal u. Values at or below 1e-12
/// count as a flat spot.
double curvature_function(const ConvexBody& body, const UnitDirection& u);
/// h_{K°}(u) = 1/ρ_K(u).
double polar_support(const ConvexBody& body, const UnitDirection& u);

using NormalIntegrand = std::function<void(const NormalSample&, double* out)>;
using RadialIntegrand = std::function<void(const RadialSample&, double* out)>;

/// ∫_{S^{n-1}} F(u) dσ(u) where F reads h, f at normal u; pulled back through
/// the body's normal chart.
std::vector<IntegralResult> integrate_normal(const ConvexBody& body, int m, const NormalIntegrand& f,
                                             const QuadratureConfig& cfg);
std::vector<IntegralResult> integrate_radial(const ConvexBody& body, int m, const RadialIntegrand& f,
                                             const QuadratureConfig& cfg);

/// (1/n)∫ρ^n dσ.
IntegralResult volume(const ConvexBody& body, const QuadratureConfig& cfg = {});
/// (1/n)∫h^{-n} dσ.
IntegralResult polar_volume(const ConvexBody& body, const QuadratureConfig& cfg = {});

/// Distance from the interior point c to ∂K along the unit vector d.
double ray_exit(const ConvexBody& body, const Vec& c, const Vec& d);
/// (n-1)-volume of K ∩ {⟨x, θ⟩ = t}.
double section_volume(const ConvexBody& body, const UnitDirection& theta, double t, const QuadratureConfig& cfg = {});
/// vol{x ∈ K : ⟨x, θ⟩ ≥ t}.
double cap_volume(const ConvexBody& body, const UnitDirection& theta, double t, const QuadratureConfig& cfg = {});

/// Orthonormal basis of θ^⊥ (columns), from the Householder reflector of θ.
Mat tangent_basis(const Vec& theta);

}  // namespace conegeom

#pragma once

#include <cstdint>

#include "conegeom/body.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

struct Section5Result {
  int n;
  double r;
  std::uint64_t samples;
  double mc_value;
  double std_error;
  double closed_form;
  double printed_form;  // the closed form as printed, kept for comparison only
  double rel_error;
  double z_score;
};

/// ∫ over (B_r^{n-1})^+ of Π_{i<n} x_i^{r-2} log[(r-1)^{n-1} Π_{i≤n} x_i^{r-2}] x_n^{-1} dx,
/// x_n = (1 - Σ x_i^r)^{1/r}. The substitution y_i = x_i^r turns the weight into a
/// Dirichlet((r-1)/r) density, which is sampled exactly.
Section5Result section5_integral(int n, double r, std::uint64_t samples, std::uint64_t seed, int threads = 1);
/// r^{1-n} Γ(α)^n/Γ(nα) [(n(r-2)/r)(ψ(α) - ψ(nα)) + (n-1) log(r-1)], α = (r-1)/r.
double section5_closed_form(int n, double r);
double section5_printed_form(int n, double r);

struct SurfaceRhs {
  double boundary_integral;  // ∫_{∂K} κ/⟨x,N⟩^n log(κ/⟨x,N⟩^{n+1}) dμ
  double omega_form;         // |K°| log(1/Ω_K)
  double residual;
};
SurfaceRhs surface_body_rhs(const ConvexBody& body, const QuadratureConfig& cfg = {});

}  // namespace conegeom

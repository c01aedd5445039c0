#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conegeom/body.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

/// Boundary densities with respect to μ at a boundary point x:
/// p = κ/(⟨x,N⟩^n n|K°|), q = ⟨x,N⟩/(n|K|).
struct DensityPair {
  double p_density;
  double q_density;
};
DensityPair densities_at(const ConvexBody& body, const Vec& x, double volume, double polar_volume);

/// D_KL(P‖Q) by sphere quadrature of p log(p/q).
double kl_p_q(const ConvexBody& body, const QuadratureConfig& cfg = {});
/// D_KL(Q‖P).
double kl_q_p(const ConvexBody& body, const QuadratureConfig& cfg = {});

/// Spherical cap {u : ∠(u, axis) < half_angle}.
struct Cap {
  Vec axis;
  double half_angle;
};
/// count caps centred at angles 2πk/count in the (e1, e2) plane.
std::vector<Cap> equispaced_caps(int n, int count, double half_angle);

enum class CapSpace { radial, normal };

/// cm_K of the boundary points whose radial direction (or outer normal) lies in the cap.
double cone_measure(const ConvexBody& body, const Cap& cap, CapSpace space, const QuadratureConfig& cfg = {});

struct ConeSample {
  Vec x;
  std::uint64_t stream;
  double weight;
};
/// Exact sampler for ℓ_r balls (generalized Gaussian) and their linear images;
/// other bodies are resampled from sphere-rule nodes weighted by ρ^n.
std::vector<ConeSample> sample_cone_measure(const BodyPtr& body, std::size_t count, std::uint64_t seed,
                                            bool allow_fallback = true);

struct CapComparison {
  Cap cap;
  double p_measure;       // P(A), A = boundary points of K with normal in the cap
  double polar_measure;   // cm_{K°} of the corresponding set on ∂K°
  double residual;
  std::optional<double> mc_frequency;
  std::optional<double> mc_sigma;
};

struct PushforwardResult {
  std::vector<CapComparison> caps;
  double max_residual = 0.0;
  /// max |freq - P(A)|/σ over caps when Monte Carlo ran
  std::optional<double> max_mc_z;
};

/// Quadrature of both sides for each cap, optionally with a Monte Carlo
/// frequency from cm_{K°} samples.
PushforwardResult pushforward_check(const BodyPtr& body, const std::vector<Cap>& caps, const QuadratureConfig& cfg = {},
                                    std::uint64_t mc_samples = 0);

/// P(A) against cm_{K°}(N_{K°}^{-1}(C)) with C the normal cap: the literal
/// composition, kept for comparison with the corrected one.
double literal_pushforward_residual(const BodyPtr& body, const Cap& cap, const QuadratureConfig& cfg = {});

struct EntropyReport {
  std::string body;
  double kl_pq = 0.0;
  double kl_qp = 0.0;
  double eq1_residual = 0.0;  // D(P‖Q) - log(|K|/|K°| Ω_K^{-1/n})
  std::optional<double> eq2_residual;  // D(Q‖P) - log(|K°|/|K| Ω_{K°}^{-1/n})
  double corollary_residual = 0.0;     // Ω^{1/n} vs (|K|/|K°|) exp(-D(P‖Q)), relative
  double corollary_printed_residual = 0.0;  // same with |K°|/|K|; nonzero off ellipsoids
  double p_total = 0.0;
  double q_total = 0.0;
  double omega = 0.0;
  std::optional<double> omega_polar;
  PushforwardResult pushforward;
};

EntropyReport entropy_report(const BodyPtr& body, int cap_count, std::uint64_t mc_samples,
                             const QuadratureConfig& cfg = {});

}  // namespace conegeom

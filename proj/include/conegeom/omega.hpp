#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conegeom/body.hpp"
#include "conegeom/limit_fit.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

/// log Ω_K = (1/|K°|) ∫ h^{-n} log(f h^{n+1}) dσ, exponentiated. Exactly 0 for polytopes.
double omega_entropy(const ConvexBody& body, const QuadratureConfig& cfg = {});
/// Same invariant from K° data alone: log Ω_K = -n⟨log(f h^{n+1})⟩ over h f dσ on K°.
double omega_entropy_dual(const BodyPtr& body, const QuadratureConfig& cfg = {}, bool allow_numerical_polar = false);

/// p-grid 2^4 .. 2^14.
std::vector<double> default_p_grid();
/// q = n²/p over the default p-grid, decreasing.
std::vector<double> default_q_grid(int n);

/// Fits g(p) = (n+p) log(as_p/(n|K°|)); limit is log Ω.
LimitFit omega_p_limit(const ConvexBody& body, const std::vector<double>& grid, const QuadratureConfig& cfg = {},
                       const FitModel& model = FitModel::log_over_p(), const FitOptions& opts = {});
/// Fits (n(n+q)/q) log(as_q(K°)/(n|K°|)) in q; limit is log Ω.
LimitFit omega_dual_p_limit(const BodyPtr& body, const std::vector<double>& qgrid, const QuadratureConfig& cfg = {},
                            const FitModel& model = FitModel::small_q(), const FitOptions& opts = {});

/// Closed form for B_r^n.
double omega_lp_closed_form(int n, double r);

/// exp((1/as_∞) ∫ Σ log(f_i h_i^{n+1}) / Π h_i dσ).
double omega_mixed_entropy(const std::vector<BodyPtr>& bodies, const QuadratureConfig& cfg = {});
LimitFit omega_mixed_p_limit(const std::vector<BodyPtr>& bodies, const std::vector<double>& grid,
                             const QuadratureConfig& cfg = {}, const FitModel& model = FitModel::log_over_p(),
                             const FitOptions& opts = {});

struct InequalityCheck {
  std::string name;
  double lhs;
  double rhs;
  bool holds;
  double relative_slack;  // (rhs - lhs)/|rhs|
};

/// Ω_K ≤ (|K|/|K°|)^n.
InequalityCheck check_information_inequality(const ConvexBody& body, const QuadratureConfig& cfg = {});
/// Ω_K ≤ (as_p/(n|K°|))^{n+p} at every grid point; returns the tightest.
InequalityCheck check_omega_below_asp(const ConvexBody& body, const std::vector<double>& ps,
                                      const QuadratureConfig& cfg = {});
/// Ω_K Ω_{K°} ≤ 1.
InequalityCheck check_polar_product(const BodyPtr& body, const QuadratureConfig& cfg = {});
/// Ω_{K°} ≤ |B_2^n|^{2n} for volume-one K.
InequalityCheck check_isoperimetric(const BodyPtr& body, const QuadratureConfig& cfg = {});

enum class OmegaRoute { entropy, dual_entropy, p_limit, dual_p_limit, closed_form, centroid };
std::optional<OmegaRoute> parse_omega_route(const std::string& name);
std::string to_string(OmegaRoute route);

struct OmegaReport {
  std::string body;
  bool polytope = false;
  std::optional<double> via_entropy;
  std::optional<double> via_entropy_dual;
  std::optional<LimitFit> via_p_limit;       // log scale
  std::optional<LimitFit> via_dual_p_limit;  // log scale
  std::optional<LimitFit> via_centroid_asymptotics;  // second-limit fit of the normalized body
  std::optional<double> via_centroid;        // Ω recovered from it
  std::optional<double> closed_form;
  /// max pairwise relative gap over entropy, dual entropy, p-limit and dual p-limit
  double cross_route_max_rel_discrepancy = 0.0;
  /// gap between the two entropy routes
  double entropy_route_discrepancy = 0.0;
  /// gap between the centroid route and the entropy route
  std::optional<double> centroid_discrepancy;
  std::vector<std::string> notes;
};

OmegaReport omega_report(const BodyPtr& body, const std::set<OmegaRoute>& routes, const QuadratureConfig& cfg = {});

}  // namespace conegeom

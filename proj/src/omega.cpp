#include "conegeom/omega.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conegeom/affine_surface.hpp"
#include "conegeom/bodies.hpp"
#include "conegeom/centroid.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/special.hpp"

namespace conegeom {

namespace {

double rel_gap(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

InequalityCheck make_check(std::string name, double lhs, double rhs) {
  const double slack = rhs == 0.0 ? (lhs <= 0.0 ? 0.0 : -1.0) : (rhs - lhs) / std::abs(rhs);
  return {std::move(name), lhs, rhs, lhs <= rhs * (1.0 + 1e-9) + 1e-300, slack};
}

}  // namespace

double omega_entropy(const ConvexBody& body, const QuadratureConfig& cfg) {
  if (body.smoothness() == Smoothness::polytope) return 0.0;
  if (body.smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, body.describe() + " is not C2_plus");
  const int n = body.dim();
  auto r = integrate_normal(
      body, 2,
      [n](const NormalSample& s, double* out) {
        const double log_h = std::log(s.support);
        out[0] = std::exp(-n * log_h);
        out[1] = out[0] * (s.log_curvature + (n + 1) * log_h);
      },
      cfg);
  return std::exp(n * r[1].value / r[0].value);
}

double omega_entropy_dual(const BodyPtr& body, const QuadratureConfig& cfg, bool allow_numerical_polar) {
  if (body->smoothness() == Smoothness::polytope) return 0.0;
  if (body->smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, body->describe() + " is not C2_plus");
  const BodyPtr polar = polar_of(body, allow_numerical_polar);
  const int n = body->dim();
  auto r = integrate_normal(
      *polar, 2,
      [n](const NormalSample& s, double* out) {
        const double log_h = std::log(s.support);
        out[0] = std::exp(log_h + s.log_curvature);
        out[1] = out[0] * (s.log_curvature + (n + 1) * log_h);
      },
      cfg);
  return std::exp(-n * r[1].value / r[0].value);
}

std::vector<double> default_p_grid() {
  std::vector<double> g;
  for (int k = 4; k <= 14; ++k) g.push_back(std::ldexp(1.0, k));
  return g;
}

std::vector<double> default_q_grid(int n) {
  std::vector<double> g;
  for (double p : default_p_grid()) g.push_back(n * n / p);
  return g;
}

LimitFit omega_p_limit(const ConvexBody& body, const std::vector<double>& grid, const QuadratureConfig& cfg,
                       const FitModel& model, const FitOptions& opts) {
  const int n = body.dim();
  if (!std::is_sorted(grid.begin(), grid.end())) fail(ErrorKind::DomainError, "p-grid must be increasing");
  AspSweep sw = as_p_sweep(body, grid, cfg);
  std::vector<double> g;
  for (std::size_t j = 0; j < grid.size(); ++j) g.push_back((n + grid[j]) * sw.log_over_polar[j]);
  return fit_limit(grid, g, model, opts);
}

LimitFit omega_dual_p_limit(const BodyPtr& body, const std::vector<double>& qgrid, const QuadratureConfig& cfg,
                            const FitModel& model, const FitOptions& opts) {
  const int n = body->dim();
  for (double q : qgrid)
    if (!(q > 0.0)) fail(ErrorKind::DomainError, "q-grid must be positive");
  const BodyPtr polar = polar_of(body, false);
  AspSweep sw = as_p_sweep(*polar, qgrid, cfg);
  std::vector<double> g;
  for (std::size_t j = 0; j < qgrid.size(); ++j) g.push_back(n * (n + qgrid[j]) / qgrid[j] * sw.log_over_volume[j]);
  return fit_limit(qgrid, g, model, opts);
}

double omega_lp_closed_form(int n, double r) {
  if (!(r > 1.0) || !std::isfinite(r)) fail(ErrorKind::DomainError, "need 1 < r < inf");
  const double a = (r - 1.0) / r;
  const double e = -(n * n * (r - 2.0) / r) * (digamma(a) - digamma(n * a));
  return std::exp(e - n * (n - 1) * std::log(r - 1.0));
}

double omega_mixed_entropy(const std::vector<BodyPtr>& bodies, const QuadratureConfig& cfg) {
  if (bodies.empty()) fail(ErrorKind::DimensionMismatch, "no bodies given");
  const int n = bodies[0]->dim();
  if (static_cast<int>(bodies.size()) != n) fail(ErrorKind::DimensionMismatch, "need exactly n bodies");
  for (const auto& b : bodies) {
    if (b->dim() != n) fail(ErrorKind::DimensionMismatch, "bodies have different dimensions");
    if (b->smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, b->describe() + " is not C2_plus");
  }
  auto r = integrate_sphere_multi(
      n, 2,
      [&](const Vec& u, double* out) {
        double log_w = 0.0, l = 0.0;
        for (const auto& b : bodies) {
          const double log_h = std::log(b->support(u));
          log_w -= log_h;
          l += b->log_curvature(u) + (n + 1) * log_h;
        }
        out[0] = std::exp(log_w);
        out[1] = out[0] * l;
      },
      cfg);
  return std::exp(r[1].value / r[0].value);
}

LimitFit omega_mixed_p_limit(const std::vector<BodyPtr>& bodies, const std::vector<double>& grid,
                             const QuadratureConfig& cfg, const FitModel& model, const FitOptions& opts) {
  std::vector<double> lr = mixed_log_ratios(bodies, grid, cfg);
  const int n = bodies[0]->dim();
  std::vector<double> g;
  for (std::size_t j = 0; j < grid.size(); ++j) g.push_back((n + grid[j]) * lr[j]);
  return fit_limit(grid, g, model, opts);
}

InequalityCheck check_information_inequality(const ConvexBody& body, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const double om = omega_entropy(body, cfg);
  const double ratio = volume(body, cfg).value / polar_volume(body, cfg).value;
  return make_check("omega <= (|K|/|K°|)^n", om, std::pow(ratio, n));
}

InequalityCheck check_omega_below_asp(const ConvexBody& body, const std::vector<double>& ps,
                                      const QuadratureConfig& cfg) {
  const int n = body.dim();
  const double log_om = std::log(omega_entropy(body, cfg));
  AspSweep sw = as_p_sweep(body, ps, cfg);
  const double log_np = std::log(n * polar_volume(body, cfg).value / sw.as_infinity);
  InequalityCheck worst{"omega <= (as_p/(n|K°|))^(n+p)", 0, 0, true, std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const double log_rhs = (n + ps[j]) * (sw.log_over_polar[j] - log_np);
    InequalityCheck c = make_check(worst.name, std::exp(log_om), std::exp(log_rhs));
    if (c.relative_slack < worst.relative_slack) worst = c;
  }
  return worst;
}

InequalityCheck check_polar_product(const BodyPtr& body, const QuadratureConfig& cfg) {
  const BodyPtr polar = polar_of(body, false);
  return make_check("omega(K) omega(K°) <= 1", omega_entropy(*body, cfg) * omega_entropy(*polar, cfg), 1.0);
}

InequalityCheck check_isoperimetric(const BodyPtr& body, const QuadratureConfig& cfg) {
  const int n = body->dim();
  const double vol = volume(*body, cfg).value;
  if (std::abs(vol - 1.0) > 1e-8) fail(ErrorKind::DomainError, "isoperimetric check needs a volume-one body");
  const BodyPtr polar = polar_of(body, false);
  return make_check("omega(K°) <= |B|^(2n)", omega_entropy(*polar, cfg), std::pow(unit_ball_volume(n), 2 * n));
}

std::optional<OmegaRoute> parse_omega_route(const std::string& name) {
  if (name == "entropy") return OmegaRoute::entropy;
  if (name == "dual-entropy" || name == "dual_entropy") return OmegaRoute::dual_entropy;
  if (name == "p-limit" || name == "p_limit") return OmegaRoute::p_limit;
  if (name == "dual" || name == "dual-p-limit" || name == "dual_p_limit") return OmegaRoute::dual_p_limit;
  if (name == "closed-form" || name == "closed_form") return OmegaRoute::closed_form;
  if (name == "centroid") return OmegaRoute::centroid;
  return std::nullopt;
}

std::string to_string(OmegaRoute route) {
  switch (route) {
    case OmegaRoute::entropy: return "entropy";
    case OmegaRoute::dual_entropy: return "dual-entropy";
    case OmegaRoute::p_limit: return "p-limit";
    case OmegaRoute::dual_p_limit: return "dual-p-limit";
    case OmegaRoute::closed_form: return "closed-form";
    case OmegaRoute::centroid: return "centroid";
  }
  return "?";
}

OmegaReport omega_report(const BodyPtr& body, const std::set<OmegaRoute>& routes, const QuadratureConfig& cfg) {
  OmegaReport rep;
  rep.body = body->describe();
  rep.closed_form = body->omega_closed_form();
  if (body->smoothness() == Smoothness::polytope) {
    rep.polytope = true;
    rep.via_entropy = 0.0;
    rep.closed_form = 0.0;
    rep.notes.push_back("polytope: omega is exactly 0, no quadrature performed");
    return rep;
  }
  if (!routes.count(OmegaRoute::closed_form)) rep.closed_form.reset();
  std::vector<double> finite;
  if (routes.count(OmegaRoute::entropy)) {
    rep.via_entropy = omega_entropy(*body, cfg);
    finite.push_back(*rep.via_entropy);
  }
  if (routes.count(OmegaRoute::dual_entropy)) {
    const bool catalog = body->polar() != nullptr;
    if (!catalog) rep.notes.push_back("dual entropy uses a numerical polar (finite-difference curvature)");
    rep.via_entropy_dual = omega_entropy_dual(body, cfg, true);
    finite.push_back(*rep.via_entropy_dual);
  }
  FitOptions lenient;
  lenient.throw_if_unreliable = false;
  if (routes.count(OmegaRoute::p_limit)) {
    rep.via_p_limit = omega_p_limit(*body, default_p_grid(), cfg, FitModel::log_over_p(), lenient);
    if (!rep.via_p_limit->reliable) rep.notes.push_back("p-limit fit flagged unreliable");
    finite.push_back(std::exp(rep.via_p_limit->limit));
  }
  if (routes.count(OmegaRoute::dual_p_limit)) {
    if (body->polar()) {
      rep.via_dual_p_limit = omega_dual_p_limit(body, default_q_grid(body->dim()), cfg, FitModel::small_q(), lenient);
      if (!rep.via_dual_p_limit->reliable) rep.notes.push_back("dual p-limit fit flagged unreliable");
      finite.push_back(std::exp(rep.via_dual_p_limit->limit));
    } else {
      rep.notes.push_back("dual p-limit skipped: no catalog polar");
    }
  }
  for (std::size_t i = 0; i < finite.size(); ++i)
    for (std::size_t j = i + 1; j < finite.size(); ++j)
      rep.cross_route_max_rel_discrepancy = std::max(rep.cross_route_max_rel_discrepancy, rel_gap(finite[i], finite[j]));
  if (rep.via_entropy && rep.via_entropy_dual) rep.entropy_route_discrepancy = rel_gap(*rep.via_entropy, *rep.via_entropy_dual);
  if (routes.count(OmegaRoute::centroid)) {
    if (body->dim() != 2) {
      rep.notes.push_back("centroid route implemented for n = 2 only");
    } else {
      const int n = body->dim();
      const double vol = volume(*body, cfg).value;
      BodyPtr unit = normalized(body, cfg);
      Theorem1Second t = theorem1_second_limit(unit, default_centroid_grid(), cfg, lenient);
      rep.via_centroid_asymptotics = t.fit;
      // Ω of the volume-one body, then undo the scaling Ω_{λK} = λ^{2n²} Ω_K
      rep.via_centroid = std::exp(std::log(t.omega_from_fit) + 2.0 * n * std::log(vol));
      if (rep.via_entropy) rep.centroid_discrepancy = rel_gap(*rep.via_centroid, *rep.via_entropy);
    }
  }
  return rep;
}

}  // namespace conegeom

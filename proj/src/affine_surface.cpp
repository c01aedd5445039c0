#include "conegeom/affine_surface.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"

namespace conegeom {

Exponent Exponent::finite(double p) {
  if (!std::isfinite(p)) fail(ErrorKind::DomainError, "finite exponent expected");
  return Exponent(Kind::finite, p);
}

Exponent Exponent::from_double(double p) {
  if (std::isnan(p)) fail(ErrorKind::DomainError, "exponent is NaN");
  if (std::isinf(p)) return p > 0 ? plus_infinity() : minus_infinity();
  return finite(p);
}

double Exponent::value() const {
  switch (kind_) {
    case Kind::finite: return p_;
    case Kind::plus_infinity: return std::numeric_limits<double>::infinity();
    case Kind::minus_infinity: return -std::numeric_limits<double>::infinity();
  }
  return p_;
}

std::string Exponent::to_string() const {
  if (kind_ == Kind::plus_infinity) return "inf";
  if (kind_ == Kind::minus_infinity) return "-inf";
  std::ostringstream s;
  s.precision(17);
  s << p_;
  return s.str();
}

void check_exponent(int n, double p) {
  if (std::abs(p + n) < 1e-3) fail(ErrorKind::ExcludedExponent, "p = -n is excluded");
}

AspValue as_p(const ConvexBody& body, Exponent p, const QuadratureConfig& cfg) {
  const int n = body.dim();
  if (!p.is_finite()) {
    IntegralResult r = polar_volume(body, cfg);
    return {p, n * r.value, n * r.error_estimate};
  }
  const double pv = p.value();
  check_exponent(n, pv);
  if (pv == 0.0) {
    IntegralResult r = volume(body, cfg);
    return {p, n * r.value, n * r.error_estimate};
  }
  if (body.smoothness() == Smoothness::polytope) {
    // κ = 0 almost everywhere on the boundary
    if (pv > 0.0) return {p, 0.0, 0.0};
    fail(ErrorKind::NonSmoothBody, "as_p with p < 0 needs positive curvature");
  }
  if (body.smoothness() != Smoothness::c2_plus)
    fail(ErrorKind::NonSmoothBody, "as_p needs curvature; " + body.describe() + " has none");
  const double eps = n / (n + pv);
  IntegralResult r = integrate_normal(
      body, 1,
      [&](const NormalSample& s, double* out) {
        const double l = s.log_curvature + (n + 1) * std::log(s.support);
        out[0] = std::exp(eps * l - n * std::log(s.support));
      },
      cfg)[0];
  return {p, r.value, r.error_estimate};
}

AspSweep as_p_sweep(const ConvexBody& body, const std::vector<double>& ps, const QuadratureConfig& cfg) {
  const int n = body.dim();
  if (body.smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, "p-sweeps need a C2_plus body");
  for (double p : ps) {
    if (!std::isfinite(p)) fail(ErrorKind::DomainError, "sweep exponents must be finite");
    check_exponent(n, p);
  }
  const int k = static_cast<int>(ps.size());
  // layout: [∫h^-n, ∫hf, ∫hf·L, then per p: ∫h^-n expm1(εL), ∫hf expm1((ε-1)L)]
  const int m = 3 + 2 * k;
  std::vector<IntegralResult> r = integrate_normal(
      body, m,
      [&](const NormalSample& s, double* out) {
        const double log_h = std::log(s.support);
        const double l = s.log_curvature + (n + 1) * log_h;
        const double w_inf = std::exp(-n * log_h);
        const double w_zero = std::exp(log_h + s.log_curvature);
        out[0] = w_inf;
        out[1] = w_zero;
        out[2] = w_zero * l;
        for (int j = 0; j < k; ++j) {
          const double eps = n / (n + ps[j]);
          out[3 + 2 * j] = w_inf * std::expm1(eps * l);
          out[4 + 2 * j] = w_zero * std::expm1((eps - 1.0) * l);
        }
      },
      cfg);
  AspSweep sw;
  sw.p = ps;
  sw.as_infinity = r[0].value;
  sw.as_zero = r[1].value;
  sw.mean_l_cone = r[2].value / r[1].value;
  for (const auto& x : r) sw.max_error = std::max(sw.max_error, x.error_estimate);
  for (int j = 0; j < k; ++j) {
    const double d_inf = r[3 + 2 * j].value / sw.as_infinity;
    const double d_zero = r[4 + 2 * j].value / sw.as_zero;
    sw.value.push_back(sw.as_infinity + r[3 + 2 * j].value);
    sw.log_over_polar.push_back(std::log1p(d_inf));
    sw.log_over_volume.push_back(std::log1p(d_zero));
  }
  return sw;
}

namespace {

void check_family(const std::vector<BodyPtr>& bodies, bool need_curvature) {
  if (bodies.empty()) fail(ErrorKind::DimensionMismatch, "no bodies given");
  const int n = bodies[0]->dim();
  if (static_cast<int>(bodies.size()) != n) fail(ErrorKind::DimensionMismatch, "need exactly n bodies in dimension n");
  for (const auto& b : bodies) {
    if (b->dim() != n) fail(ErrorKind::DimensionMismatch, "bodies have different dimensions");
    if (need_curvature && b->smoothness() != Smoothness::c2_plus)
      fail(ErrorKind::NonSmoothBody, b->describe() + " is not C2_plus");
  }
}

}  // namespace

AspValue as_p_mixed(const std::vector<BodyPtr>& bodies, double p, const QuadratureConfig& cfg) {
  check_family(bodies, true);
  const int n = bodies[0]->dim();
  check_exponent(n, p);
  IntegralResult r = integrate_sphere(
      n,
      [&](const Vec& u) {
        double acc = 0.0;
        for (const auto& b : bodies) {
          const double log_h = std::log(b->support(u));
          acc += ((1.0 - p) * log_h + b->log_curvature(u)) / (n + p);
        }
        return std::exp(acc);
      },
      cfg);
  return {Exponent::finite(p), r.value, r.error_estimate};
}

IntegralResult dual_mixed_volume(const std::vector<BodyPtr>& bodies, const QuadratureConfig& cfg) {
  check_family(bodies, false);
  const int n = bodies[0]->dim();
  return integrate_sphere(
      n,
      [&](const Vec& u) {
        double prod = 1.0;
        for (const auto& b : bodies) prod /= b->support(u);
        return prod;
      },
      cfg);
}

std::vector<double> mixed_log_ratios(const std::vector<BodyPtr>& bodies, const std::vector<double>& ps,
                                     const QuadratureConfig& cfg) {
  check_family(bodies, true);
  const int n = bodies[0]->dim();
  const int k = static_cast<int>(ps.size());
  for (double p : ps) check_exponent(n, p);
  std::vector<IntegralResult> r = integrate_sphere_multi(
      n, 1 + k,
      [&](const Vec& u, double* out) {
        double log_w = 0.0, l = 0.0;
        for (const auto& b : bodies) {
          const double log_h = std::log(b->support(u));
          log_w -= log_h;
          l += b->log_curvature(u) + (n + 1) * log_h;
        }
        const double w = std::exp(log_w);
        out[0] = w;
        for (int j = 0; j < k; ++j) out[1 + j] = w * std::expm1(l / (n + ps[j]));
      },
      cfg);
  std::vector<double> out;
  for (int j = 0; j < k; ++j) out.push_back(std::log1p(r[1 + j].value / r[0].value));
  return out;
}

MonotoneQuantities monotone_quantities(const ConvexBody& body, const std::vector<double>& ps,
                                       const QuadratureConfig& cfg) {
  const int n = body.dim();
  AspSweep sw = as_p_sweep(body, ps, cfg);
  // independent evaluations of n|K°| and n|K|
  const double n_polar = n * polar_volume(body, cfg).value;
  const double n_vol = n * volume(body, cfg).value;
  MonotoneQuantities q;
  q.p = ps;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const double p = ps[j];
    q.over_as_infinity.push_back((n + p) * sw.log_over_polar[j]);
    q.over_polar_volume.push_back((n + p) * (sw.log_over_polar[j] + std::log(sw.as_infinity / n_polar)));
    if (p == 0.0) {
      // limit p -> 0 of ((n+p)/p) log(as_p/as_0), corrected for the as_0 vs n|K| gap at p = 0
      q.over_volume.push_back(-sw.mean_l_cone);
    } else {
      q.over_volume.push_back((n + p) / p * (sw.log_over_volume[j] + std::log(sw.as_zero / n_vol)));
    }
  }
  return q;
}

}  // namespace conegeom

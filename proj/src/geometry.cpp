#include "conegeom/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "conegeom/errors.hpp"
#include "conegeom/rng.hpp"

namespace conegeom {

BoundaryPoint boundary_point_with_normal(const ConvexBody& body, const UnitDirection& u) {
  BoundaryPoint bp;
  bp.normal = u.coords();
  bp.x = body.support_gradient(u.coords());
  bp.support_value = body.support(u.coords());
  bp.gauss_curvature = body.smoothness() == Smoothness::c2_plus ? std::exp(-body.log_curvature(u.coords())) : 0.0;
  return bp;
}

BoundaryPoint boundary_point_along(const ConvexBody& body, const UnitDirection& d) {
  BoundaryPoint bp;
  bp.x = body.radial(d.coords()) * d.coords();
  bp.normal = body.boundary_normal(bp.x);
  bp.support_value = bp.x.dot(bp.normal);
  bp.gauss_curvature = body.smoothness() == Smoothness::c2_plus ? std::exp(-body.log_curvature(bp.normal)) : 0.0;
  return bp;
}

double curvature_function(const ConvexBody& body, const UnitDirection& u) {
  if (body.smoothness() != Smoothness::c2_plus)
    fail(ErrorKind::NonSmoothBody, body.describe() + " is not C2_plus");
  const double lf = body.log_curvature(u.coords());
  if (std::isnan(lf)) fail(ErrorKind::SingularHessian, "curvature undefined at this normal");
  const double f = std::exp(lf);
  if (f <= 1e-12) fail(ErrorKind::SingularHessian, "curvature function vanishes (flat spot)");
  return f;
}

double polar_support(const ConvexBody& body, const UnitDirection& u) {
  const double rho = body.radial(u.coords());
  if (!(rho > 0.0) || !std::isfinite(rho)) fail(ErrorKind::DegenerateBody, "radial function is not positive");
  return 1.0 / rho;
}

std::vector<IntegralResult> integrate_normal(const ConvexBody& body, int m, const NormalIntegrand& f,
                                             const QuadratureConfig& cfg) {
  return integrate_sphere_multi(
      body.dim(), m,
      [&](const Vec& v, double* out) {
        const NormalSample s = body.sample_normal(v);
        f(s, out);
        for (int k = 0; k < m; ++k) out[k] *= s.jacobian;
      },
      cfg);
}

std::vector<IntegralResult> integrate_radial(const ConvexBody& body, int m, const RadialIntegrand& f,
                                             const QuadratureConfig& cfg) {
  return integrate_sphere_multi(
      body.dim(), m,
      [&](const Vec& v, double* out) {
        const RadialSample s = body.sample_radial(v);
        f(s, out);
        for (int k = 0; k < m; ++k) out[k] *= s.jacobian;
      },
      cfg);
}

IntegralResult volume(const ConvexBody& body, const QuadratureConfig& cfg) {
  const int n = body.dim();
  IntegralResult r = integrate_radial(
      body, 1, [n](const RadialSample& s, double* out) { out[0] = std::pow(s.radial, n); }, cfg)[0];
  r.value /= n;
  r.error_estimate /= n;
  return r;
}

IntegralResult polar_volume(const ConvexBody& body, const QuadratureConfig& cfg) {
  const int n = body.dim();
  IntegralResult r = integrate_normal(
      body, 1, [n](const NormalSample& s, double* out) { out[0] = std::pow(s.support, -n); }, cfg)[0];
  r.value /= n;
  r.error_estimate /= n;
  return r;
}

Mat tangent_basis(const Vec& theta) {
  const int n = static_cast<int>(theta.size());
  Vec v = theta;
  const double s = theta[n - 1] >= 0.0 ? 1.0 : -1.0;
  v[n - 1] += s;
  Mat q = Mat::Identity(n, n) - (2.0 / v.squaredNorm()) * v * v.transpose();
  return q.leftCols(n - 1);
}

double ray_exit(const ConvexBody& body, const Vec& c, const Vec& d) {
  auto g = [&](double r) { return body.gauge(c + r * d) - 1.0; };
  const double g0 = g(0.0);
  if (g0 >= 0.0) return 0.0;
  // the gauge is convex along the ray; grow until we leave K
  double hi = 1.0 / body.gauge(d);
  int guard = 0;
  while (g(hi) <= 0.0) {
    hi *= 2.0;
    if (++guard > 200) fail(ErrorKind::RootFindFailure, "ray does not leave the body");
  }
  std::uintmax_t iters = 200;
  auto [a, b] = boost::math::tools::toms748_solve(g, 0.0, hi, g0, g(hi), boost::math::tools::eps_tolerance<double>(52),
                                                  iters);
  return 0.5 * (a + b);
}

namespace {

Vec section_center(const ConvexBody& body, const Vec& theta, double t) {
  // (t/h)·x(θ) lies in K by convexity and on the hyperplane
  const double h = body.support(theta);
  return (t / h) * body.support_gradient(theta);
}

}  // namespace

double section_volume(const ConvexBody& body, const UnitDirection& theta, double t, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const Vec& th = theta.coords();
  const double h = body.support(th);
  if (!(std::abs(t) < h)) {
    if (std::abs(t) == h) return 0.0;
    fail(ErrorKind::OutOfRange, "section offset outside (-h, h)");
  }
  const Vec c = section_center(body, th, t);
  const Mat basis = tangent_basis(th);
  if (n == 2) {
    const Vec e = basis.col(0);
    return ray_exit(body, c, e) + ray_exit(body, c, -e);
  }
  if (n == 3) {
    const Vec e1 = basis.col(0), e2 = basis.col(1);
    auto half_r2 = [&](double phi) {
      const double r = ray_exit(body, c, std::cos(phi) * e1 + std::sin(phi) * e2);
      return 0.5 * r * r;
    };
    std::vector<double> pts;
    for (int k = 0; k <= 8; ++k) pts.push_back(k * std::numbers::pi / 4.0);
    return integrate_1d(half_r2, pts, 1e-11).value;
  }
  // n >= 4: hit-or-miss in a cube of the slice
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound += std::pow(body.support(Vec::Unit(n, i)), 2);
  bound = std::sqrt(bound);
  const std::uint64_t samples = std::max<std::uint64_t>(cfg.mc_samples / 10, 1000);
  CounterRng rng(cfg.seed, 0x53454354ULL);
  std::uint64_t hits = 0;
  Vec x(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    x = t * th;
    for (int k = 0; k < n - 1; ++k) x += (2.0 * rng.uniform() - 1.0) * bound * basis.col(k);
    if (body.contains(x)) ++hits;
  }
  return std::pow(2.0 * bound, n - 1) * static_cast<double>(hits) / static_cast<double>(samples);
}

double cap_volume(const ConvexBody& body, const UnitDirection& theta, double t, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const Vec& th = theta.coords();
  const double h = body.support(th);
  if (t < 0.0 || t > h * (1.0 + 1e-14)) fail(ErrorKind::OutOfRange, "cap offset outside [0, h]");
  if (t >= h) return 0.0;
  if (n <= 3) {
    // s = h - w^2 absorbs the square-root vanishing of sections near the tip
    const double wmax = std::sqrt(h - t);
    auto integrand = [&](double w) {
      const double s = h - w * w;
      if (s >= h) return 0.0;
      return 2.0 * w * section_volume(body, theta, s, cfg);
    };
    // chords near the tip are ill-conditioned; their roundoff sets an absolute floor
    const double floor = 256.0 * std::numeric_limits<double>::epsilon() * std::pow(h, n);
    return integrate_1d(integrand, 0.0, wmax, 1e-11, floor).value;
  }
  std::vector<double> box(n);
  double box_volume = 1.0;
  for (int i = 0; i < n; ++i) {
    box[i] = body.support(Vec::Unit(n, i));
    box_volume *= 2.0 * box[i];
  }
  CounterRng rng(cfg.seed, 0x434150ULL);
  std::uint64_t hits = 0;
  const std::uint64_t samples = cfg.mc_samples;
  Vec x(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) x[i] = (2.0 * rng.uniform() - 1.0) * box[i];
    if (x.dot(th) >= t && body.contains(x)) ++hits;
  }
  return box_volume * static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace conegeom

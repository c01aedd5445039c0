#include "conegeom/centroid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>

#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"

namespace conegeom {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_near(double a, double ref) {
  // representative of a mod 2π closest to ref
  return a - 2.0 * kPi * std::round((a - ref) / (2.0 * kPi));
}

void check_exponent_p(double p) {
  if (!(p >= 1.0)) fail(ErrorKind::ExponentTooSmall, "centroid exponent must be >= 1");
}

// ρ^{n+p} carries p times the relative error of ρ
double moment_tolerance(double p) { return std::max(1e-13, 64.0 * p * std::numeric_limits<double>::epsilon()); }

double log_moment_plane(const ConvexBody& body, double p, const Vec& theta) {
  const double tau = std::atan2(theta[1], theta[0]);
  const Vec xs = body.support_gradient(theta);
  const double h = body.support(theta);
  const double phis = wrap_near(std::atan2(xs[1], xs[0]), tau);
  // log of the integrand at the boundary point with normal θ
  const double shift = 2.0 * std::log(xs.norm()) + p * std::log(h);
  auto g = [&](double phi) {
    const double c = std::cos(phi - tau), sn = std::sin(phi - tau);
    if (c <= 0.0) return 0.0;
    const Vec w{{std::cos(phi), std::sin(phi)}};
    // log cos via log1p keeps full relative accuracy next to the peak
    return std::exp((2.0 + p) * std::log(body.radial(w)) + 0.5 * p * std::log1p(-sn * sn) - shift);
  };
  const double a = tau - kPi / 2.0, b = tau + kPi / 2.0;
  std::vector<double> pts{a, b};
  auto add = [&](double x) {
    if (x > a && x < b) pts.push_back(x);
  };
  add(phis);
  for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    add(phis - k / std::sqrt(p));
    add(phis + k / std::sqrt(p));
  }
  for (int i = 0; i < 2; ++i) {
    for (double sgn : {1.0, -1.0}) {
      const Vec d = body.sample_radial(sgn * Vec::Unit(2, i)).u;
      add(wrap_near(std::atan2(d[1], d[0]), tau));
    }
  }
  std::sort(pts.begin(), pts.end());
  const double integral = integrate_1d(g, pts, moment_tolerance(p)).value;
  return shift + std::log(2.0 * integral) - std::log(2.0 + p);
}

double log_moment_space(const ConvexBody& body, double p, const Vec& theta) {
  // cap-centred coordinates: ω = cos ψ θ + sin ψ (cos φ e1 + sin φ e2)
  const Mat basis = tangent_basis(theta);
  const Vec e1 = basis.col(0), e2 = basis.col(1);
  const Vec xs = body.support_gradient(theta);
  const double h = body.support(theta);
  const double rs = xs.norm();
  const double shift = 3.0 * std::log(rs) + p * std::log(h);
  const double psis = std::acos(std::clamp(h / rs, -1.0, 1.0));
  std::vector<double> psi_pts{0.0, kPi / 2.0};
  auto add = [&](double x) {
    if (x > 0.0 && x < kPi / 2.0) psi_pts.push_back(x);
  };
  add(psis);
  for (double k : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    add(psis - k / std::sqrt(p));
    add(psis + k / std::sqrt(p));
  }
  std::sort(psi_pts.begin(), psi_pts.end());
  auto inner = [&](double phi) {
    const Vec e = std::cos(phi) * e1 + std::sin(phi) * e2;
    auto g = [&](double psi) {
      const double c = std::cos(psi), sn = std::sin(psi);
      if (c <= 0.0) return 0.0;
      const Vec w = c * theta + sn * e;
      return std::exp((3.0 + p) * std::log(body.radial(w)) + 0.5 * p * std::log1p(-sn * sn) - shift) * sn;
    };
    return integrate_1d(g, psi_pts, moment_tolerance(p)).value;
  };
  std::vector<double> phi_pts;
  for (int k = 0; k <= 8; ++k) phi_pts.push_back(k * kPi / 4.0);
  const double integral = integrate_1d(inner, phi_pts, 10.0 * moment_tolerance(p)).value;
  return shift + std::log(2.0 * integral) - std::log(3.0 + p);
}

double log_moment_general(const ConvexBody& body, double p, const Vec& theta, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const double shift = n * std::log(body.support_gradient(theta).norm()) + p * std::log(body.support(theta));
  const auto r = integrate_radial(
      body, 1,
      [&](const RadialSample& s, double* out) {
        const double c = std::abs(s.u.dot(theta));
        out[0] = c > 0.0 ? std::exp((n + p) * std::log(s.radial) + p * std::log(c) - shift) : 0.0;
      },
      cfg);
  return shift + std::log(r[0].value) - std::log(n + p);
}

double log_zp_support(const ConvexBody& body, double p, const Vec& theta, const QuadratureConfig& cfg) {
  const int n = body.dim();
  if (n == 2) return log_moment_plane(body, p, theta) / p;
  if (n == 3) return log_moment_space(body, p, theta) / p;
  return log_moment_general(body, p, theta, cfg) / p;
}

double body_volume(const ConvexBody& body, const QuadratureConfig& cfg) {
  if (auto v = body.volume_closed_form()) return *v;
  return volume(body, cfg).value;
}

}  // namespace

double zp_log_moment(const ConvexBody& body, double p, const Vec& theta) {
  check_exponent_p(p);
  const int n = body.dim();
  if (theta.size() != n) fail(ErrorKind::DimensionMismatch, "direction and body dimensions differ");
  if (n == 2) return log_moment_plane(body, p, theta);
  if (n == 3) return log_moment_space(body, p, theta);
  return log_moment_general(body, p, theta, QuadratureConfig{});
}

double zp_support(const ConvexBody& body, double p, const UnitDirection& theta, const QuadratureConfig& cfg) {
  if (std::isinf(p) && p > 0) return body.support(theta.coords());
  check_exponent_p(p);
  if (theta.dim() != body.dim()) fail(ErrorKind::DimensionMismatch, "direction and body dimensions differ");
  return std::exp(log_zp_support(body, p, theta.coords(), cfg));
}

CentroidBodyHandle::CentroidBodyHandle(BodyPtr base, double p, const QuadratureConfig& cfg)
    : base_(std::move(base)), p_(p), cfg_(cfg) {
  if (!(std::isinf(p) && p > 0)) check_exponent_p(p);
}

double CentroidBodyHandle::support(const UnitDirection& theta) const { return zp_support(*base_, p_, theta, cfg_); }

IntegralResult zp_polar_volume_integral(const ConvexBody& body, double p, const QuadratureConfig& cfg) {
  if (std::isinf(p) && p > 0) return polar_volume(body, cfg);
  check_exponent_p(p);
  const int n = body.dim();
  QuadratureConfig inner = cfg;
  inner.threads = 1;
  auto r = integrate_sphere(
      n, [&](const Vec& u) { return std::exp(-n * log_zp_support(body, p, u, inner)); }, cfg);
  r.value /= n;
  r.error_estimate /= n;
  return r;
}

double zp_polar_volume(const ConvexBody& body, double p, const QuadratureConfig& cfg) {
  return zp_polar_volume_integral(body, p, cfg).value;
}

double zp_polar_volume_gap(const ConvexBody& body, double p, const QuadratureConfig& cfg) {
  check_exponent_p(p);
  const int n = body.dim();
  QuadratureConfig inner = cfg;
  inner.threads = 1;
  const auto r = integrate_sphere(
      n,
      [&](const Vec& u) {
        const double lh = std::log(body.support(u));
        return std::exp(-n * lh) * std::expm1(-n * (log_zp_support(body, p, u, inner) - lh));
      },
      cfg);
  return r.value / n;
}

Mat second_moment_matrix(const ConvexBody& body, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const int m = n * (n + 1) / 2;
  const auto r = integrate_radial(
      body, m,
      [&](const RadialSample& s, double* out) {
        const double w = std::pow(s.radial, n + 2) / (n + 2);
        int k = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) out[k++] = w * s.u[i] * s.u[j];
      },
      cfg);
  Mat M(n, n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      M(i, j) = M(j, i) = r[k].value;
      ++k;
    }
  return M;
}

double isotropic_constant(const ConvexBody& body, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const double vol = body_volume(body, cfg);
  // L_K^2 = det(M)^{1/n} / |K|^{1+2/n}; affine invariant, equal to det(M)^{1/n} at volume one
  const double logdet = std::log(second_moment_matrix(body, cfg).determinant());
  return std::exp(0.5 * (logdet / n - (1.0 + 2.0 / n) * std::log(vol)));
}

double inverse_lyz_ratio(const ConvexBody& body, double p, const QuadratureConfig& cfg) {
  const int n = body.dim();
  if (n != 2) fail(ErrorKind::DimensionMismatch, "inverse LYZ diagnostic is planar only");
  // |Z| = (1/2)∫(h^2 - h'^2) dφ = π Σ_k (1 - k^2)|c_k|^2 for h = Σ c_k e^{ikφ}
  const int N = 128;
  std::vector<double> h(N);
  for (int j = 0; j < N; ++j) h[j] = zp_support(body, p, UnitDirection::angle(2.0 * kPi * j / N), cfg);
  double area = 0.0;
  for (int k = -N / 2 + 1; k < N / 2; ++k) {
    std::complex<double> c = 0.0;
    for (int j = 0; j < N; ++j) c += h[j] * std::polar(1.0, -2.0 * kPi * k * j / N);
    c /= N;
    area += kPi * (1.0 - double(k) * k) * std::norm(c);
  }
  return std::sqrt(area) / (std::sqrt(p / (n + p)) * isotropic_constant(body, cfg));
}

std::vector<double> default_centroid_grid() {
  std::vector<double> g;
  for (int k = 6; k <= 14; ++k) g.push_back(std::ldexp(1.0, k));
  return g;
}

Theorem1First theorem1_first_limit(const BodyPtr& body, const std::vector<double>& grid, const QuadratureConfig& cfg,
                                   const FitOptions& opts, const FitModel& model) {
  const int n = body->dim();
  Theorem1First out;
  out.polar_volume = polar_volume(*body, cfg).value;
  out.target = 0.5 * n * (n + 1) * out.polar_volume;
  std::vector<double> s;
  for (double p : grid) s.push_back(p / std::log(p) * zp_polar_volume_gap(*body, p, cfg));
  out.fit = fit_limit(grid, s, model, opts);
  return out;
}

std::pair<double, double> theorem1_rhs(const BodyPtr& body, const QuadratureConfig& cfg) {
  const int n = body->dim();
  const double c = (n + 1) * std::log(2.0) + (n - 1) * std::log(kPi);
  const auto r = integrate_normal(
      *body, 1,
      [&](const NormalSample& s, double* out) {
        const double lh = std::log(s.support);
        out[0] = std::exp(-n * lh) * (c + s.log_curvature + (n + 1) * lh);
      },
      cfg);
  const double integral = -0.5 * r[0].value;
  const double polar = polar_volume(*body, cfg).value;
  const double log_omega = std::log(omega_entropy(*body, cfg));
  const double omega_form =
      -0.5 * polar * (n * (n + 1) * std::log(2.0) + n * (n - 1) * std::log(kPi) + log_omega);
  return {integral, omega_form};
}

Theorem1Second theorem1_second_limit(const BodyPtr& body, const std::vector<double>& grid,
                                     const QuadratureConfig& cfg, const FitOptions& opts, const FitModel& model) {
  const int n = body->dim();
  Theorem1Second out;
  out.polar_volume = polar_volume(*body, cfg).value;
  const double lead = 0.5 * n * (n + 1) * out.polar_volume;
  std::vector<double> s;
  for (double p : grid) s.push_back(p * zp_polar_volume_gap(*body, p, cfg) - lead * std::log(p));
  out.fit = fit_limit(grid, s, model, opts);
  const auto [integral, omega_form] = theorem1_rhs(body, cfg);
  out.rhs_integral = integral;
  out.rhs_omega_form = omega_form;
  out.forms_residual = std::abs(integral - omega_form);
  out.omega_from_fit = std::exp(-2.0 * out.fit.limit / out.polar_volume - n * (n + 1) * std::log(2.0) -
                                n * (n - 1) * std::log(kPi));
  return out;
}

double floating_support(const ConvexBody& body, double delta, const UnitDirection& theta,
                        const QuadratureConfig& cfg) {
  if (!(delta > 0.0 && delta < 1.0)) fail(ErrorKind::OutOfRange, "delta must lie in (0, 1)");
  const double h = body.support(theta.coords());
  auto g = [&](double t) { return 2.0 * cap_volume(body, theta, t, cfg) - delta; };
  const double g0 = g(0.0);
  if (!(g0 > 0.0)) fail(ErrorKind::RootFindFailure, "body volume is below 1 - delta");
  std::uintmax_t iters = 100;
  try {
    auto [a, b] = boost::math::tools::toms748_solve(g, 0.0, h, g0, -delta,
                                                    boost::math::tools::eps_tolerance<double>(48), iters);
    return 0.5 * (a + b);
  } catch (const std::exception& e) {
    fail(ErrorKind::RootFindFailure, std::string("floating body root: ") + e.what());
  }
}

std::vector<double> default_delta_grid() { return {1e-4, 1e-3, 1e-2, 0.1, std::exp(-1.0)}; }

std::vector<UnitDirection> circle_directions(int count) {
  std::vector<UnitDirection> d;
  for (int k = 0; k < count; ++k) d.push_back(UnitDirection::angle(2.0 * kPi * k / count));
  return d;
}

SandwichResult sandwich_ratios(const ConvexBody& body, const std::vector<double>& deltas,
                               const std::vector<UnitDirection>& directions, const QuadratureConfig& cfg) {
  SandwichResult out;
  out.deltas = deltas;
  out.min_ratio = std::numeric_limits<double>::infinity();
  out.max_ratio = -out.min_ratio;
  for (double delta : deltas) {
    if (!(delta > 0.0 && delta <= std::exp(-1.0) * (1.0 + 1e-12)))
      fail(ErrorKind::OutOfRange, "sandwich needs delta in (0, 1/e]");
    const double p = std::max(1.0, std::log(1.0 / delta));
    std::vector<double> row;
    for (const auto& th : directions) {
      const double r = floating_support(body, delta, th, cfg) / zp_support(body, p, th, cfg);
      row.push_back(r);
      out.min_ratio = std::min(out.min_ratio, r);
      out.max_ratio = std::max(out.max_ratio, r);
    }
    out.ratios.push_back(std::move(row));
  }
  return out;
}

// ---- logarithmic Laplace transform ----

namespace {

/// log ∫_0^1 t^{k-1} e^{zt} dt
double log_phi(int k, double z) {
  if (std::abs(z) < 1.0 || (z >= 0.0 && z < 2.0 * k + 10.0)) {
    double term = 1.0, sum = 1.0 / k;
    for (int j = 1; j < 400; ++j) {
      term *= z / j;
      const double add = term / (k + j);
      sum += add;
      if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return std::log(sum);
  }
  if (z > 0.0) {
    // repeated integration by parts terminates for integer k
    double sum = 0.0, coef = 1.0 / z;
    for (int j = 0; j < k; ++j) {
      sum += (j % 2 == 0 ? 1.0 : -1.0) * coef;
      coef *= (k - 1 - j) / z;
    }
    const double tail = (k % 2 == 0 ? 1.0 : -1.0) * std::tgamma(k) * std::exp(-z - k * std::log(z));
    return z + std::log(sum + tail);
  }
  const double a = -z;
  return std::lgamma(k) + std::log(boost::math::gamma_p(k, a)) - k * std::log(a);
}

class LaplaceContext {
 public:
  explicit LaplaceContext(const ConvexBody& body) : body_(body), n_(body.dim()) {
    if (n_ > 3) fail(ErrorKind::DimensionMismatch, "log-Laplace transform is implemented for n <= 3");
    const SphereRule rule = SphereRule::product_tanh_sinh(n_, n_ == 2 ? 6 : 3);
    Vec v;
    double w;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      rule.node(i, v, w);
      if (w <= 1e-290) continue;
      const RadialSample s = body.sample_radial(v);
      u_.push_back(s.u);
      rho_.push_back(s.radial);
      logw_.push_back(std::log(w * s.jacobian));
    }
  }

  /// Λ(y), the tilted mean and covariance.
  void evaluate(const Vec& y, double& lambda, Vec& mean, Mat& cov) const {
    const std::size_t m = u_.size();
    std::vector<double> l0(m), l1(m), l2(m);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double z = rho_[i] * u_[i].dot(y);
      const double lr = std::log(rho_[i]);
      l0[i] = logw_[i] + n_ * lr + log_phi(n_, z);
      l1[i] = logw_[i] + (n_ + 1) * lr + log_phi(n_ + 1, z);
      l2[i] = logw_[i] + (n_ + 2) * lr + log_phi(n_ + 2, z);
      top = std::max(top, l0[i]);
    }
    double z0 = 0.0;
    Vec z1 = Vec::Zero(n_);
    Mat z2 = Mat::Zero(n_, n_);
    for (std::size_t i = 0; i < m; ++i) {
      z0 += std::exp(l0[i] - top);
      z1 += std::exp(l1[i] - top) * u_[i];
      z2 += std::exp(l2[i] - top) * (u_[i] * u_[i].transpose());
    }
    lambda = top + std::log(z0);
    mean = z1 / z0;
    cov = z2 / z0 - mean * mean.transpose();
  }

  double dual(const Vec& x, Vec& y) const {
    if (body_.gauge(x) >= 1.0) return std::numeric_limits<double>::infinity();
    double lam;
    Vec mean;
    Mat cov;
    evaluate(y, lam, mean, cov);
    double value = x.dot(y) - lam;
    for (int it = 0; it < 200; ++it) {
      const Vec g = x - mean;
      const Vec d = cov.ldlt().solve(g);
      const double decrement = g.dot(d);
      if (!(decrement >= 0.0)) fail(ErrorKind::OptimizationFailure, "tilted covariance lost definiteness");
      if (decrement < 1e-20) return value;
      double step = 1.0;
      for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
        const Vec y2 = y + step * d;
        double lam2;
        Vec mean2;
        Mat cov2;
        evaluate(y2, lam2, mean2, cov2);
        const double v2 = x.dot(y2) - lam2;
        if (v2 >= value - 1e-15 * std::abs(value)) {
          y = y2;
          value = v2;
          mean = mean2;
          cov = cov2;
          break;
        }
      }
      if (step < 1e-17) return value;
    }
    fail(ErrorKind::OptimizationFailure, "Newton ascent for the Legendre transform did not converge");
  }

 private:
  const ConvexBody& body_;
  int n_;
  std::vector<Vec> u_;
  std::vector<double> rho_, logw_;
};

}  // namespace

double log_laplace_dual(const ConvexBody& body, const Vec& x) {
  const LaplaceContext ctx(body);
  Vec y = Vec::Zero(body.dim());
  return ctx.dual(x, y);
}

double log_laplace_level_support(const ConvexBody& body, double level, const UnitDirection& theta) {
  if (!(level > 0.0)) fail(ErrorKind::OutOfRange, "level must be positive");
  const LaplaceContext ctx(body);
  const Vec& th = theta.coords();
  double lo = 0.0, hi = body.radial(th);
  Vec y = Vec::Zero(body.dim());
  Vec y_lo = y;
  for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    y = y_lo;
    if (ctx.dual(mid * th, y) <= level) {
      lo = mid;
      y_lo = y;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---- sections ----

std::pair<double, double> section_derivatives(const ConvexBody& body, const UnitDirection& theta, double t) {
  const int n = body.dim();
  if (body.smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, body.describe() + " is not C2_plus");
  const Vec& th = theta.coords();
  const double h = body.support(th);
  if (!(std::abs(t) < h)) fail(ErrorKind::OutOfRange, "section offset outside (-h, h)");
  const Mat basis = tangent_basis(th);
  const Vec c = (t / h) * body.support_gradient(th);
  if (n == 2) {
    double d1 = 0.0, d2 = 0.0;
    for (double sgn : {1.0, -1.0}) {
      const Vec e = sgn * basis.col(0);
      const Vec x = c + ray_exit(body, c, e) * e;
      const Vec N = body.boundary_normal(x);
      const double a = N.dot(th);
      const double kappa = std::exp(-body.log_curvature(N));
      d1 -= a / std::sqrt(1.0 - a * a);
      d2 -= kappa / std::pow(1.0 - a * a, 1.5);
    }
    return {d1, d2};
  }
  if (n != 3) fail(ErrorKind::DimensionMismatch, "section derivatives are implemented for n = 2, 3");
  const Vec e1 = basis.col(0), e2 = basis.col(1);
  // the slice curve is star-shaped about c; ds = r dφ / ⟨ê, N_slice⟩
  auto point = [&](double phi, double& a, double& kappa, double& ds, double& slice_support) {
    const Vec e = std::cos(phi) * e1 + std::sin(phi) * e2;
    const double r = ray_exit(body, c, e);
    const Vec x = c + r * e;
    const Vec N = body.boundary_normal(x);
    a = N.dot(th);
    kappa = std::exp(-body.log_curvature(N));
    const Vec Ns = (N - a * th).normalized();
    ds = r / e.dot(Ns);
    slice_support = Ns.dot(x);
  };
  std::vector<double> pts;
  for (int k = 0; k <= 8; ++k) pts.push_back(k * kPi / 4.0);
  auto f1 = [&](double phi) {
    double a, kappa, ds, ss;
    point(phi, a, kappa, ds, ss);
    return -a / std::sqrt(1.0 - a * a) * ds;
  };
  auto f2 = [&](double phi) {
    double a, kappa, ds, ss;
    point(phi, a, kappa, ds, ss);
    const double b = 1.0 - a * a;
    return -(std::sqrt(kappa) / std::pow(b, 1.5) - (n - 2) * a * a / (ss * b)) * ds;
  };
  return {integrate_1d(f1, pts, 1e-12).value, integrate_1d(f2, pts, 1e-12).value};
}

double tp_maximizer(const ConvexBody& body, const UnitDirection& theta, double p) {
  if (!(p > 0.0)) fail(ErrorKind::OutOfRange, "p must be positive");
  if (body.dim() > 3) fail(ErrorKind::DimensionMismatch, "t_p is implemented for n <= 3");
  const double h = body.support(theta.coords());
  auto F = [&](double t) {
    if (t <= 0.0) return p * section_volume(body, theta, 0.0);
    return p * section_volume(body, theta, t) + t * section_derivatives(body, theta, t).first;
  };
  double hi = 0.5 * h, Fhi = F(hi);
  for (int k = 2; Fhi >= 0.0; ++k) {
    if (k > 52) fail(ErrorKind::RootFindFailure, "no sign change of d/dt (t^p f) below h");
    hi = h * (1.0 - std::ldexp(1.0, -k));
    Fhi = F(hi);
  }
  // uniqueness on the bracket: one sign change on a fine scan
  double lo = 0.0, Flo = F(0.0);
  int changes = 0;
  double prev = Flo, prev_t = 0.0;
  for (int j = 1; j <= 32; ++j) {
    const double t = hi * j / 32.0;
    const double v = j == 32 ? Fhi : F(t);
    if ((v < 0.0) != (prev < 0.0)) {
      ++changes;
      lo = prev_t;
      Flo = prev;
    }
    prev = v;
    prev_t = t;
  }
  if (changes != 1) fail(ErrorKind::RootFindFailure, "stationary point of t^p f is not unique on the bracket");
  double b = lo + hi / 32.0, Fb = F(b);
  if (b > hi) {
    b = hi;
    Fb = Fhi;
  }
  std::uintmax_t iters = 200;
  auto [x0, x1] = boost::math::tools::toms748_solve(F, lo, b, Flo, Fb,
                                                    boost::math::tools::eps_tolerance<double>(50), iters);
  return 0.5 * (x0 + x1);
}

}  // namespace conegeom

#include "conegeom/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "conegeom/bodies.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"
#include "conegeom/rng.hpp"

namespace conegeom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angle_of(const Vec& v) { return std::atan2(v[1], v[0]); }

Vec unit_at(double phi) {
  Vec u(2);
  u << std::cos(phi), std::sin(phi);
  return u;
}

/// Angles in (lo, hi) congruent to the given directions mod 2π.
std::vector<double> breakpoints_in(const std::vector<double>& dirs, double lo, double hi) {
  std::vector<double> pts{lo, hi};
  for (double d : dirs) {
    double a = d + kTwoPi * std::ceil((lo - d) / kTwoPi);
    for (; a < hi; a += kTwoPi)
      if (a > lo) pts.push_back(a);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<double> radial_singular_angles(const ConvexBody& body) {
  std::vector<double> out;
  for (int i = 0; i < 2; ++i)
    for (double s : {1.0, -1.0}) out.push_back(angle_of(body.sample_radial(s * Vec::Unit(2, i)).u));
  return out;
}

std::vector<double> normal_singular_angles(const ConvexBody& body) {
  std::vector<double> out;
  for (int i = 0; i < 2; ++i)
    for (double s : {1.0, -1.0}) out.push_back(angle_of(body.sample_normal(s * Vec::Unit(2, i)).u));
  return out;
}

double integrate_arc(const std::function<double(double)>& f, const std::vector<double>& pts) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    total += integrate_1d_endpoint_singular(f, pts[i], pts[i + 1], 1e-13).value;
  }
  return total;
}

/// ∫_cap g(u) dσ(u) in cap-centred coordinates; n = 2 arcs are split at the given singular angles.
double integrate_cap(int n, const Cap& cap, const std::function<double(const Vec&)>& g,
                     const std::vector<double>& singular_angles, const QuadratureConfig& cfg) {
  if (n == 2) {
    const double alpha = angle_of(cap.axis);
    const double lo = alpha - cap.half_angle, hi = alpha + cap.half_angle;
    return integrate_arc([&](double phi) { return g(unit_at(phi)); }, breakpoints_in(singular_angles, lo, hi));
  }
  const Vec c = cap.axis.normalized();
  const Mat basis = tangent_basis(c);
  if (n == 3) {
    auto ring = [&](double psi) {
      const double s = std::sin(psi), co = std::cos(psi);
      auto inner = [&](double phi) {
        const Vec u = co * c + s * (std::cos(phi) * basis.col(0) + std::sin(phi) * basis.col(1));
        return g(u.normalized());
      };
      std::vector<double> pts;
      for (int k = 0; k <= 8; ++k) pts.push_back(k * kTwoPi / 8.0);
      return s * integrate_1d(inner, pts, 1e-12).value;
    };
    return integrate_1d(ring, 0.0, cap.half_angle, 1e-12).value;
  }
  const double cos_a = std::cos(cap.half_angle);
  return integrate_sphere(n, [&](const Vec& u) { return u.dot(c) > cos_a ? g(u) : 0.0; }, cfg).value;
}

double cap_p_measure_n2(const ConvexBody& body, const Cap& cap, double polar_vol) {
  // A = boundary points with normals in the cap; their radial angles form [b1, b2]
  const double alpha = angle_of(cap.axis);
  const double b1 = angle_of(body.support_gradient(unit_at(alpha - cap.half_angle)));
  double b2 = angle_of(body.support_gradient(unit_at(alpha + cap.half_angle)));
  while (b2 <= b1) b2 += kTwoPi;
  auto integrand = [&](double beta) {
    const Vec d = unit_at(beta);
    const double rho = body.radial(d);
    const Vec x = rho * d;
    const Vec nrm = body.boundary_normal(x);
    const double hx = x.dot(nrm);
    const double kappa = std::exp(-body.log_curvature(nrm));
    // dμ = ρ^n/⟨x,N⟩ dσ(d)
    return kappa * rho * rho / std::pow(hx, 3);
  };
  return integrate_arc(integrand, breakpoints_in(radial_singular_angles(body), b1, b2)) / (2.0 * polar_vol);
}

}  // namespace

DensityPair densities_at(const ConvexBody& body, const Vec& x, double vol, double polar_vol) {
  const int n = body.dim();
  const Vec nrm = body.boundary_normal(x);
  const double hx = x.dot(nrm);
  const double kappa = body.smoothness() == Smoothness::c2_plus ? std::exp(-body.log_curvature(nrm)) : 0.0;
  return {kappa / (std::pow(hx, n) * n * polar_vol), hx / (n * vol)};
}

namespace {

struct KlMoments {
  double a_inf, b_inf, a_zero, b_zero;
};

KlMoments kl_moments(const ConvexBody& body, const QuadratureConfig& cfg) {
  if (body.smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, body.describe() + " is not C2_plus");
  const int n = body.dim();
  auto r = integrate_normal(
      body, 4,
      [n](const NormalSample& s, double* out) {
        const double log_h = std::log(s.support);
        const double l = s.log_curvature + (n + 1) * log_h;
        out[0] = std::exp(-n * log_h);
        out[1] = out[0] * l;
        out[2] = std::exp(log_h + s.log_curvature);
        out[3] = out[2] * l;
      },
      cfg);
  return {r[0].value, r[1].value, r[2].value, r[3].value};
}

}  // namespace

double kl_p_q(const ConvexBody& body, const QuadratureConfig& cfg) {
  const KlMoments m = kl_moments(body, cfg);
  // (1/(n|K°|)) ∫ h^{-n} [log(|K|/|K°|) - L] with n|K°| = ∫h^{-n}, n|K| = ∫hf
  return std::log(m.a_zero / m.a_inf) - m.b_inf / m.a_inf;
}

double kl_q_p(const ConvexBody& body, const QuadratureConfig& cfg) {
  const KlMoments m = kl_moments(body, cfg);
  return std::log(m.a_inf / m.a_zero) + m.b_zero / m.a_zero;
}

std::vector<Cap> equispaced_caps(int n, int count, double half_angle) {
  std::vector<Cap> caps;
  for (int k = 0; k < count; ++k) {
    Vec axis = Vec::Zero(n);
    axis[0] = std::cos(kTwoPi * k / count);
    axis[1] = std::sin(kTwoPi * k / count);
    caps.push_back({axis, half_angle});
  }
  return caps;
}

double cone_measure(const ConvexBody& body, const Cap& cap, CapSpace space, const QuadratureConfig& cfg) {
  const int n = body.dim();
  const double vol = volume(body, cfg).value;
  double integral;
  if (space == CapSpace::radial) {
    integral = integrate_cap(
        n, cap, [&](const Vec& u) { return std::pow(body.radial(u), n); },
        n == 2 ? radial_singular_angles(body) : std::vector<double>{}, cfg);
  } else {
    if (body.smoothness() != Smoothness::c2_plus)
      fail(ErrorKind::NonSmoothBody, "normal-space caps need curvature");
    integral = integrate_cap(
        n, cap, [&](const Vec& u) { return std::exp(std::log(body.support(u)) + body.log_curvature(u)); },
        n == 2 ? normal_singular_angles(body) : std::vector<double>{}, cfg);
  }
  return integral / (n * vol);
}

std::vector<ConeSample> sample_cone_measure(const BodyPtr& body, std::size_t count, std::uint64_t seed,
                                            bool allow_fallback) {
  const int n = body->dim();
  std::vector<ConeSample> out;
  out.reserve(count);
  const double weight = 1.0 / static_cast<double>(count);

  std::function<Vec(const ConvexBody&, CounterRng&)> draw;
  draw = [&](const ConvexBody& b, CounterRng& rng) -> Vec {
    if (auto* lp = dynamic_cast<const LpBall*>(&b)) {
      const double r = lp->exponent();
      std::gamma_distribution<double> gamma(1.0 / r, 1.0);
      Vec t(n);
      for (int i = 0; i < n; ++i) {
        const double mag = std::pow(gamma(rng), 1.0 / r);
        t[i] = (rng() & 1U) ? mag : -mag;
      }
      return t * b.radial(t.normalized()) / t.norm();
    }
    if (auto* ball = dynamic_cast<const Ball*>(&b)) {
      std::normal_distribution<double> normal;
      Vec t(n);
      for (int i = 0; i < n; ++i) t[i] = normal(rng);
      return ball->radius() * t.normalized();
    }
    if (dynamic_cast<const CrossPolytope*>(&b)) {
      std::exponential_distribution<double> expo;
      Vec t(n);
      for (int i = 0; i < n; ++i) t[i] = (rng() & 1U) ? expo(rng) : -expo(rng);
      return t / t.lpNorm<1>();
    }
    if (dynamic_cast<const Cube*>(&b)) {
      // all 2n facet cones have equal volume
      Vec t(n);
      for (int i = 0; i < n; ++i) t[i] = 2.0 * rng.uniform() - 1.0;
      const std::uint64_t f = rng() % (2 * static_cast<std::uint64_t>(n));
      t[static_cast<int>(f / 2)] = (f & 1U) ? 1.0 : -1.0;
      return t;
    }
    if (auto* li = dynamic_cast<const LinearImage*>(&b)) return li->matrix() * draw(*li->base(), rng);
    fail(ErrorKind::UnsupportedBody, "no exact cone-measure sampler");
  };

  bool exact = true;
  try {
    CounterRng probe(seed, 0);
    draw(*body, probe);
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::UnsupportedBody) throw;
    exact = false;
  }
  if (exact) {
    for (std::size_t i = 0; i < count; ++i) {
      CounterRng rng(seed, i);
      out.push_back({draw(*body, rng), i, weight});
    }
    return out;
  }
  if (!allow_fallback) fail(ErrorKind::UnsupportedBody, "no exact cone-measure sampler for " + body->describe());
  // resample radial directions of a sphere rule with weights ρ^n
  SphereRule rule = SphereRule::for_dimension(n, SphereRule::first_level(n) + 2, seed);
  std::vector<double> cumulative(rule.size());
  std::vector<Vec> points(rule.size());
  double total = 0.0;
  Vec v;
  double w;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.node(i, v, w);
    const RadialSample s = body->sample_radial(v);
    points[i] = s.radial * s.u;
    total += w * s.jacobian * std::pow(s.radial, n);
    cumulative[i] = total;
  }
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(seed, i);
    const double target = rng.uniform() * total;
    const std::size_t k = std::lower_bound(cumulative.begin(), cumulative.end(), target) - cumulative.begin();
    out.push_back({points[std::min(k, points.size() - 1)], i, weight});
  }
  return out;
}

PushforwardResult pushforward_check(const BodyPtr& body, const std::vector<Cap>& caps, const QuadratureConfig& cfg,
                                    std::uint64_t mc_samples) {
  if (body->smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, "pushforward needs a C2_plus body");
  const BodyPtr polar = body->polar();
  if (!polar) fail(ErrorKind::PolarNotInCatalog, "pushforward needs a catalog polar of " + body->describe());
  const int n = body->dim();
  const double polar_vol_k = polar_volume(*body, cfg).value;  // (1/n)∫h_K^{-n}
  const double vol_polar = volume(*polar, cfg).value;           // (1/n)∫ρ_{K°}^n

  std::vector<ConeSample> samples;
  if (mc_samples > 0) samples = sample_cone_measure(polar, mc_samples, cfg.seed);

  PushforwardResult res;
  for (const Cap& cap : caps) {
    CapComparison row{cap, 0.0, 0.0, 0.0, std::nullopt, std::nullopt};
    if (n == 2) {
      row.p_measure = cap_p_measure_n2(*body, cap, polar_vol_k);
    } else {
      row.p_measure = integrate_cap(
                          n, cap,
                          [&](const Vec& u) { return std::pow(body->support_gradient(u).dot(u), -n); }, {}, cfg) /
                      (n * polar_vol_k);
    }
    // the set on ∂K° has radial directions equal to the normal cap of A
    row.polar_measure = integrate_cap(
                            n, cap, [&](const Vec& u) { return std::pow(polar->radial(u), n); },
                            n == 2 ? radial_singular_angles(*polar) : std::vector<double>{}, cfg) /
                        (n * vol_polar);
    row.residual = std::abs(row.p_measure - row.polar_measure);
    res.max_residual = std::max(res.max_residual, row.residual);
    if (!samples.empty()) {
      const Vec c = cap.axis.normalized();
      const double cos_a = std::cos(cap.half_angle);
      std::uint64_t hits = 0;
      for (const ConeSample& s : samples) {
        const Vec d = polar->boundary_normal(s.x);
        const Vec x = body->radial(d) * d;
        if (body->boundary_normal(x).dot(c) > cos_a) ++hits;
      }
      const double freq = static_cast<double>(hits) / static_cast<double>(samples.size());
      const double sigma = std::sqrt(std::max(row.p_measure * (1.0 - row.p_measure), 1e-300) /
                                     static_cast<double>(samples.size()));
      row.mc_frequency = freq;
      row.mc_sigma = sigma;
      const double z = std::abs(freq - row.p_measure) / sigma;
      res.max_mc_z = std::max(res.max_mc_z.value_or(0.0), z);
    }
    res.caps.push_back(row);
  }
  return res;
}

double literal_pushforward_residual(const BodyPtr& body, const Cap& cap, const QuadratureConfig& cfg) {
  const BodyPtr polar = body->polar();
  if (!polar) fail(ErrorKind::PolarNotInCatalog, "needs a catalog polar");
  if (body->dim() != 2) fail(ErrorKind::DimensionMismatch, "implemented for n = 2");
  const double p = cap_p_measure_n2(*body, cap, polar_volume(*body, cfg).value);
  return std::abs(p - cone_measure(*polar, cap, CapSpace::normal, cfg));
}

EntropyReport entropy_report(const BodyPtr& body, int cap_count, std::uint64_t mc_samples,
                             const QuadratureConfig& cfg) {
  const int n = body->dim();
  EntropyReport rep;
  rep.body = body->describe();
  rep.kl_pq = kl_p_q(*body, cfg);
  rep.kl_qp = kl_q_p(*body, cfg);
  const double vol = volume(*body, cfg).value;
  const double pvol = polar_volume(*body, cfg).value;
  rep.omega = body->omega_closed_form().value_or(omega_entropy(*body, cfg));
  rep.eq1_residual = rep.kl_pq - (std::log(vol / pvol) - std::log(rep.omega) / n);
  const double root = std::pow(rep.omega, 1.0 / n);
  rep.corollary_residual = std::abs(root - vol / pvol * std::exp(-rep.kl_pq)) / root;
  // volume ratio the other way up, as the identity is sometimes quoted
  rep.corollary_printed_residual = std::abs(root - pvol / vol * std::exp(-rep.kl_pq)) / root;
  if (BodyPtr polar = body->polar()) {
    rep.omega_polar = polar->omega_closed_form().value_or(omega_entropy(*polar, cfg));
    rep.eq2_residual = rep.kl_qp - (std::log(pvol / vol) - std::log(*rep.omega_polar) / n);
  }
  // ∫p dμ through the radial parametrization, ∫q dμ through the normal one
  rep.p_total = integrate_radial(
                    *body, 1,
                    [&](const RadialSample& s, double* out) {
                      const Vec x = s.radial * s.u;
                      const Vec nrm = body->boundary_normal(x);
                      const double hx = x.dot(nrm);
                      out[0] = std::exp(-body->log_curvature(nrm) + n * std::log(s.radial) - (n + 1) * std::log(hx));
                    },
                    cfg)[0]
                    .value /
                (n * pvol);
  rep.q_total = integrate_normal(
                    *body, 1,
                    [](const NormalSample& s, double* out) { out[0] = std::exp(std::log(s.support) + s.log_curvature); },
                    cfg)[0]
                    .value /
                (n * vol);
  if (cap_count > 0 && body->polar())
    rep.pushforward =
        pushforward_check(body, equispaced_caps(n, cap_count, std::numbers::pi / cap_count), cfg, mc_samples);
  return rep;
}

}  // namespace conegeom

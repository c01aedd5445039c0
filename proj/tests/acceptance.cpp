// Acceptance runner: one PASS/FAIL line per criterion.
// usage: conegeom_acceptance [criterion numbers...]   (default: all)
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conegeom/affine_surface.hpp"
#include "conegeom/asymptotics.hpp"
#include "conegeom/bodies.hpp"
#include "conegeom/centroid.hpp"
#include "conegeom/entropy.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/experiments.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"

using namespace conegeom;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Mat random_matrix(int n, std::mt19937_64& gen, double max_cond) {
  std::normal_distribution<double> g;
  while (true) {
    Mat T(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) T(i, j) = g(gen);
    Eigen::JacobiSVD<Mat> svd(T);
    const auto s = svd.singularValues();
    if (s[0] / s[n - 1] <= max_cond) return T;
  }
}

Mat ellipse_matrix() {
  Mat A(2, 2);
  A << 1.6, 0.35, 0.35, 0.7;
  return A;
}

Mat ellipsoid3_matrix() {
  Mat A(3, 3);
  A << 1.3, 0.2, -0.1, 0.2, 0.9, 0.15, -0.1, 0.15, 0.6;
  return A;
}

void c1(Outcome& o) {
  double worst_e = 0, worst_d = 0;
  for (int n = 2; n <= 5; ++n) {
    auto b = make_ball(n);
    worst_e = std::max(worst_e, std::abs(omega_entropy(*b) - 1.0));
    worst_d = std::max(worst_d, std::abs(omega_entropy_dual(b) - 1.0));
  }
  o.detail << "max|entropy-1|=" << worst_e << " max|dual-1|=" << worst_d;
  o.require(worst_e <= 1e-10, "entropy route");
  o.require(worst_d <= 1e-8, "dual route");
}

void c2(Outcome& o) {
  double worst = 0;
  for (int n : {2, 3})
    for (double r : {1.5, 2.0, 3.0, 5.0})
      worst = std::max(worst, rel(omega_entropy(*make_lp_ball(n, r)), omega_lp_closed_form(n, r)));
  o.detail << "max rel gap=" << worst;
  o.require(worst <= 1e-6, "closed form");
}

void c3(Outcome& o) {
  const std::set<OmegaRoute> routes{OmegaRoute::entropy, OmegaRoute::dual_entropy, OmegaRoute::p_limit,
                                    OmegaRoute::dual_p_limit};
  for (auto [name, body] : {std::pair<const char*, BodyPtr>{"B_3^2", make_lp_ball(2, 3.0)},
                            {"ellipse", normalized(make_ellipsoid(ellipse_matrix()))}}) {
    OmegaReport r = omega_report(body, routes);
    o.detail << name << ": cross=" << r.cross_route_max_rel_discrepancy << " entropy=" << r.entropy_route_discrepancy
             << "; ";
    o.require(r.via_p_limit && r.via_dual_p_limit, std::string(name) + " missing route");
    o.require(r.cross_route_max_rel_discrepancy <= 1e-2, std::string(name) + " extrapolated routes");
    o.require(r.entropy_route_discrepancy <= 1e-6, std::string(name) + " entropy routes");
  }
}

void c4(Outcome& o) {
  std::mt19937_64 gen(20240);
  double worst = 0;
  for (auto k : {make_ball(2), make_lp_ball(2, 3.0)}) {
    const double base = omega_entropy(*k);
    for (int i = 0; i < 20; ++i) {
      const Mat T = random_matrix(2, gen, 10.0);
      const double ratio = omega_entropy(*linear_image(k, T)) / (std::pow(std::abs(T.determinant()), 4) * base);
      worst = std::max(worst, std::abs(ratio - 1.0));
    }
  }
  o.detail << "max|ratio-1|=" << worst << " over 40 maps";
  o.require(worst <= 1e-5, "transformation law");
}

void c5(Outcome& o) {
  std::vector<BodyPtr> bodies{make_ellipsoid(ellipse_matrix()), make_ellipsoid(ellipsoid3_matrix())};
  for (int n : {2, 3})
    for (double r : {1.5, 3.0, 5.0}) bodies.push_back(make_lp_ball(n, r));
  double worst = 0;
  for (const auto& k : bodies) {
    const int n = k->dim();
    const BodyPtr kp = polar_of(k, false);
    for (double p : {0.5, 1.0, 2.0, 5.0}) {
      const double a = as_p(*k, Exponent::finite(p)).value;
      const double b = as_p(*kp, Exponent::finite(n * n / p)).value;
      worst = std::max(worst, std::abs(a / b - 1.0));
    }
  }
  o.detail << "max|ratio-1|=" << worst << " over " << bodies.size() << " bodies";
  o.require(worst <= 1e-6, "duality");
}

void c6(Outcome& o) {
  const std::vector<double> ps{0, 0.5, 1, 2, 4, 8, 16};
  std::mt19937_64 gen(606);
  std::vector<BodyPtr> bodies;
  for (int n : {2, 3}) {
    bodies.push_back(make_ball(n));
    for (double r : {1.5, 3.0, 5.0}) bodies.push_back(make_lp_ball(n, r));
  }
  bodies.push_back(make_ellipsoid(ellipse_matrix()));
  bodies.push_back(make_ellipsoid(ellipsoid3_matrix()));
  bodies.push_back(linear_image(make_lp_ball(2, 3.0), random_matrix(2, gen, 5.0)));
  int violations = 0;
  double ball_dev = 0;
  for (const auto& b : bodies) {
    MonotoneQuantities q = monotone_quantities(*b, ps);
    for (std::size_t j = 1; j < ps.size(); ++j) {
      if (q.over_as_infinity[j] > q.over_as_infinity[j - 1] + 1e-12) ++violations;
      if (q.over_polar_volume[j] > q.over_polar_volume[j - 1] + 1e-12) ++violations;
      if (q.over_volume[j] < q.over_volume[j - 1] - 1e-12) ++violations;
    }
  }
  for (int n : {2, 3, 4}) {
    MonotoneQuantities q = monotone_quantities(*make_ball(n), ps);
    for (std::size_t j = 0; j < ps.size(); ++j)
      for (double v : {q.over_as_infinity[j], q.over_polar_volume[j], q.over_volume[j]})
        ball_dev = std::max(ball_dev, std::abs(std::expm1(v)));
  }
  o.detail << bodies.size() << " bodies, violations=" << violations << ", ball max|q-1|=" << ball_dev;
  o.require(violations == 0, "monotonicity");
  o.require(ball_dev <= 1e-8, "ball constants");
}

void c7(Outcome& o) {
  double min_kl = INFINITY;
  std::vector<BodyPtr> bodies{make_lp_ball(2, 3.0), make_lp_ball(2, 1.5), make_lp_ball(3, 3.0), make_lp_ball(3, 5.0)};
  for (const auto& b : bodies) min_kl = std::min({min_kl, kl_p_q(*b), kl_q_p(*b)});
  EntropyReport r = entropy_report(make_lp_ball(2, 3.0), 4, 0);
  double ell = 0;
  for (auto e : {make_ellipsoid(ellipse_matrix()), make_ellipsoid(ellipsoid3_matrix())})
    ell = std::max({ell, std::abs(kl_p_q(*e)), std::abs(kl_q_p(*e))});
  InequalityCheck info = check_information_inequality(*make_lp_ball(2, 3.0));
  o.detail << "min KL=" << min_kl << " eq1=" << r.eq1_residual << " eq2=" << r.eq2_residual.value_or(NAN)
           << " ellipsoid KL=" << ell << " info slack=" << info.relative_slack;
  o.require(min_kl >= -1e-12, "Gibbs");
  o.require(std::abs(r.eq1_residual) <= 1e-6, "eq1");
  o.require(r.eq2_residual && std::abs(*r.eq2_residual) <= 1e-6, "eq2");
  o.require(ell <= 1e-8, "ellipsoid KL");
  o.require(info.holds && info.relative_slack > 1e-6, "strict information inequality");
}

void c8(Outcome& o) {
  double worst_res = 0, worst_z = 0;
  std::vector<BodyPtr> bodies{make_ball(2), make_ball(3), make_ellipsoid(ellipse_matrix()), make_lp_ball(2, 3.0)};
  QuadratureConfig cfg;
  cfg.seed = 7;
  for (const auto& b : bodies) {
    PushforwardResult r = pushforward_check(b, equispaced_caps(b->dim(), 8, 0.35), cfg, 1000000);
    worst_res = std::max(worst_res, r.max_residual);
    worst_z = std::max(worst_z, r.max_mc_z.value_or(INFINITY));
  }
  o.detail << "max cap residual=" << worst_res << " max MC z=" << worst_z << " (32 caps, seed 7)";
  o.require(worst_res <= 1e-6, "quadrature residual");
  o.require(worst_z <= 3.0, "Monte Carlo");
}

void c9(Outcome& o) {
  const double target = 3 * pi * pi;
  for (auto [name, body] : {std::pair<const char*, BodyPtr>{"disc", normalized(make_ball(2))},
                            {"ellipse", normalized(make_ellipsoid(ellipse_matrix()))}}) {
    Theorem1First t = theorem1_first_limit(body, default_centroid_grid());
    const double e = rel(t.fit.limit, target);
    o.detail << name << ": " << t.fit.limit << " (rel " << e << "); ";
    o.require(e <= 0.02, name);
  }
}

void c10(Outcome& o) {
  const double target = -pi * pi * std::log(8 / pi);
  Theorem1Second t = theorem1_second_limit(normalized(make_ball(2)), default_centroid_grid());
  const double e = rel(t.fit.limit, target);
  auto [i3, w3] = theorem1_rhs(make_lp_ball(2, 3.0));
  const double r3 = std::abs(i3 - w3) / std::abs(w3);
  const double rd = t.forms_residual / std::abs(t.rhs_omega_form);
  o.detail << "disc limit " << t.fit.limit << " (rel " << e << "), forms disc=" << rd << " B_3^2=" << r3;
  o.require(e <= 0.05, "second limit");
  o.require(rd <= 1e-8, "disc forms");
  o.require(r3 <= 1e-6, "B_3^2 forms");
}

void c11(Outcome& o) {
  double lo = INFINITY, hi = -INFINITY;
  for (auto b : {normalized(make_ball(2)), normalized(make_ellipsoid(ellipse_matrix())),
                 normalized(make_lp_ball(2, 3.0))}) {
    SandwichResult s = sandwich_ratios(*b, default_delta_grid(), circle_directions(64));
    lo = std::min(lo, s.min_ratio);
    hi = std::max(hi, s.max_ratio);
  }
  o.detail << "ratios in [" << lo << ", " << hi << "]";
  o.require(lo >= 0.2 && hi <= 3.0, "bracket");
}

void c12(Outcome& o) {
  auto disc = normalized(make_ball(2));
  auto cube = make_cube(2);
  auto lp = normalized(make_lp_ball(2, 3.0));
  auto ell = normalized(make_ellipsoid(ellipse_matrix()));
  double min_slack = INFINITY, ell_gap = 0;
  for (double p : {1.0, 2.0, 4.0, 8.0}) {
    const double ref = zp_polar_volume(*disc, p);
    for (const auto& k : {cube, lp}) min_slack = std::min(min_slack, (ref - zp_polar_volume(*k, p)) / ref);
    ell_gap = std::max(ell_gap, rel(zp_polar_volume(*ell, p), ref));
  }
  o.detail << "min relative slack=" << min_slack << " ellipse gap=" << ell_gap;
  o.require(min_slack >= 0.0, "inequality");
  o.require(ell_gap <= 1e-6, "equality case");
}

void c13(Outcome& o) {
  auto rows = appendix_table({2, 3, 5}, {0.0, 0.5, 1.0}, 8, 14);
  const bool decays = p2_residual_decays(rows);
  StirlingResult s = stirling_terms(10.0);
  o.detail << "p^2 residual decays=" << (decays ? "yes" : "no") << " (" << rows.size()
           << " rows), Stirling rel error at 10=" << s.rel_error;
  o.require(decays, "appendix decay");
  o.require(std::abs(s.rel_error) <= 1e-7, "Stirling bound 1e-7");
}

void c14(Outcome& o) {
  auto b = make_ball(3);
  const UnitDirection e3(Vec::Unit(3, 2));
  double ball = 0;
  for (double t : {0.1, 0.3, 0.6, 0.9}) {
    auto [d1, d2] = section_derivatives(*b, e3, t);
    ball = std::max({ball, std::abs(d1 + 2 * pi * t), std::abs(d2 + 2 * pi)});
  }
  auto e = make_ellipsoid(ellipse_matrix());
  double fd = 0;
  const double h = 1e-3;
  for (double a : {0.0, 0.8, 2.1}) {
    const UnitDirection u = UnitDirection::angle(a);
    const double top = e->support(u.coords());
    for (double s : {0.1, 0.4, 0.7}) {
      const double t = s * top;
      auto [d1, d2] = section_derivatives(*e, u, t);
      const double fp = section_volume(*e, u, t + h), f0 = section_volume(*e, u, t), fm = section_volume(*e, u, t - h);
      fd = std::max({fd, std::abs(d1 - (fp - fm) / (2 * h)) / std::max(1.0, std::abs(d1)),
                     std::abs(d2 - (fp - 2 * f0 + fm) / (h * h)) / std::max(1.0, std::abs(d2))});
    }
  }
  o.detail << "ball max err=" << ball << " ellipse FD max rel=" << fd;
  o.require(ball <= 1e-6, "ball");
  o.require(fd <= 1e-4, "finite differences");
}

void c15(Outcome& o) {
  int threads = 1;
  if (const char* env = std::getenv("CONEGEOM_THREADS")) threads = std::max(1, std::atoi(env));
  for (int n : {2, 3}) {
    Section5Result r = section5_integral(n, 3.0, 10000000, 1, threads);
    o.detail << "(" << n << ",3): mc=" << r.mc_value << " cf=" << r.closed_form << " z=" << r.z_score
             << " rel=" << r.rel_error << "; ";
    o.require(std::abs(r.z_score) <= 3.0 && r.rel_error <= 0.01, "n=" + std::to_string(n));
  }
}

void c16(Outcome& o) {
  bool ok = true;
  for (int n : {2, 3}) {
    auto c = make_cube(n);
    ok = ok && omega_entropy(*c) == 0.0;
    for (double p : {1.0, 2.0}) ok = ok && as_p(*c, Exponent::finite(p)).value == 0.0;
  }
  o.detail << "cube omega and as_1, as_2 exactly zero: " << (ok ? "yes" : "no");
  o.require(ok, "exact zeros");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void(Outcome&)>> all{c1, c2, c3, c4, c5, c6, c7, c8,
                                                       c9, c10, c11, c12, c13, c14, c15, c16};
  std::vector<int> pick;
  for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));
  if (pick.empty())
    for (int i = 1; i <= 16; ++i) pick.push_back(i);
  int failures = 0;
  for (int k : pick) {
    if (k < 1 || k > 16) {
      std::fprintf(stderr, "no criterion %d\n", k);
      return 64;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      all[k - 1](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s  (%.2f s)\n", k, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

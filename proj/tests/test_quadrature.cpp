#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conegeom/bodies.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/quadrature.hpp"
#include "conegeom/rng.hpp"

using namespace conegeom;
using std::numbers::pi;

TEST_CASE("sphere rule weights sum to the sphere area") {
  for (int n = 2; n <= 6; ++n) {
    const SphereRule rule = SphereRule::for_dimension(n, SphereRule::first_level(n) + 1);
    double s = 0.0;
    for (double w : rule.weights()) s += w;
    CHECK(s == doctest::Approx(sphere_area(n)).epsilon(1e-10));
  }
}

TEST_CASE("product rules are exact on degree-two polynomials") {
  for (int n = 2; n <= 4; ++n) {
    const SphereRule rule = SphereRule::for_dimension(n, SphereRule::first_level(n) + 1);
    const auto r = apply_rule(rule, 3, [](const Vec& u, double* out) {
      out[0] = u[0] * u[0];
      out[1] = u[0] * u[1];
      out[2] = u[1];
    });
    CHECK(r[0] == doctest::Approx(sphere_area(n) / n).epsilon(1e-12));
    CHECK(std::abs(r[1]) < 1e-12);
    CHECK(std::abs(r[2]) < 1e-12);
  }
}

TEST_CASE("sphere integrals of simple integrands") {
  QuadratureConfig cfg;
  CHECK(integrate_sphere(2, [](const Vec&) { return 1.0; }, cfg).value == doctest::Approx(2 * pi).epsilon(1e-12));
  const auto ball = make_ball(2);
  CHECK(integrate_sphere(2, [&](const Vec& u) { return std::pow(ball->support(u), -2); }, cfg).value ==
        doctest::Approx(2 * pi).epsilon(1e-12));
  // ∫‖u‖_3^{-2} dσ = 2|B_3^2|
  const double v = integrate_sphere(2, [](const Vec& u) { return std::pow(u.lpNorm<3>(), -2); }, cfg).value;
  CHECK(v == doctest::Approx(2 * 3.5332775005708999).epsilon(1e-10));
}

TEST_CASE("QMC rule in dimension 5") {
  QuadratureConfig cfg;
  cfg.sphere_tol = 1e-4;
  const double v = integrate_sphere(5, [](const Vec& u) { return u[0] * u[0]; }, cfg).value;
  CHECK(v == doctest::Approx(sphere_area(5) / 5).epsilon(1e-3));
}

TEST_CASE("non-finite integrands are reported") {
  try {
    integrate_sphere(2, [](const Vec& u) { return u[0] > 0.5 ? std::nan("") : 1.0; }, QuadratureConfig{});
    FAIL("expected NonFiniteIntegrand");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteIntegrand);
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("budget failures") {
  QuadratureConfig cfg;
  cfg.max_nodes = 200;
  try {
    integrate_sphere(3, [](const Vec& u) { return std::sqrt(std::abs(u[0] - 0.3)); }, cfg);
    FAIL("expected QuadratureBudgetExceeded");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::QuadratureBudgetExceeded);
    CHECK(e.is_budget_failure());
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto body = make_lp_ball(3, 3.0);
  QuadratureConfig one, four;
  four.threads = 4;
  CHECK(volume(*body, one).value == volume(*body, four).value);
  CHECK(polar_volume(*body, one).value == polar_volume(*body, four).value);
}

TEST_CASE("one-dimensional rules") {
  CHECK(integrate_1d([](double x) { return std::exp(-x * x); }, 0.0, 1.0).value ==
        doctest::Approx(0.74682413281242702540).epsilon(1e-14));
  CHECK(integrate_1d([](double x) { return std::abs(x - 0.3); }, {0.0, 0.3, 1.0}).value ==
        doctest::Approx(0.045 + 0.245).epsilon(1e-14));
  CHECK(integrate_1d_endpoint_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("compensated sums") {
  CompensatedSum s;
  s.add(1.0);
  for (int k = 0; k < 1000; ++k) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-10));
}

TEST_CASE("counter rng streams are reproducible") {
  CounterRng a(7, 3), b(7, 3), c(7, 4);
  bool differs = false;
  for (int k = 0; k < 100; ++k) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x > 0.0);
    CHECK(x < 1.0);
    if (x != c.uniform()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("monte carlo cap volumes in dimension 4") {
  // two seeds agree within three combined standard errors
  const auto ball = make_ball(4);
  QuadratureConfig a, b;
  a.mc_samples = b.mc_samples = 400000;
  a.seed = 1;
  b.seed = 2;
  const UnitDirection th = UnitDirection::axis(4, 0);
  const double va = cap_volume(*ball, th, 0.3, a), vb = cap_volume(*ball, th, 0.3, b);
  const double box = 16.0, pr = va / box;
  const double sigma = box * std::sqrt(pr * (1 - pr) / a.mc_samples);
  CHECK(std::abs(va - vb) < 3.0 * std::sqrt(2.0) * sigma);
  // exact: |B^3| ∫_{0.3}^1 (1-t^2)^{3/2} dt
  const double exact = 4.0 * pi / 3.0 *
                       integrate_1d([](double t) { return std::pow(1 - t * t, 1.5); }, 0.3, 1.0, 1e-13).value;
  CHECK(std::abs(va - exact) < 4.0 * sigma);
}

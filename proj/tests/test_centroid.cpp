#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conegeom/bodies.hpp"
#include "conegeom/centroid.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"

using namespace conegeom;
using std::numbers::pi;

namespace {
BodyPtr unit_disc() { return normalized(make_ball(2)); }
UnitDirection dir(double a) {
  Vec v(2);
  v << std::cos(a), std::sin(a);
  return UnitDirection(v);
}
}  // namespace

TEST_CASE("Z_p support of the unit-area disc") {
  auto d = unit_disc();
  const UnitDirection e1 = dir(0.0);
  CHECK(zp_support(*d, 1, e1) == doctest::Approx(0.239449496166888749).epsilon(1e-10));
  CHECK(zp_support(*d, 2, e1) == doctest::Approx(1.0 / (2 * std::sqrt(pi))).epsilon(1e-10));
  CHECK(zp_support(*d, 3, e1) == doctest::Approx(0.312397834971779547).epsilon(1e-10));
  CHECK(zp_support(*d, 4, dir(1.1)) == doctest::Approx(0.335469133482706958).epsilon(1e-10));
  CHECK(zp_support(*d, 8, e1) == doctest::Approx(0.392338631088172000).epsilon(1e-10));
}

TEST_CASE("Z_p polar volumes of the disc") {
  auto d = unit_disc();
  CHECK(zp_polar_volume(*d, 1) == doctest::Approx(54.7926137066263709).epsilon(1e-9));
  CHECK(zp_polar_volume(*d, 2) == doctest::Approx(4 * pi * pi).epsilon(1e-9));
  CHECK(zp_polar_volume(*d, 4) == doctest::Approx(27.9154567985555181).epsilon(1e-9));
  CHECK(zp_polar_volume(*d, 8) == doctest::Approx(20.4092820621629489).epsilon(1e-9));
  // the gap form agrees with the difference of the two volumes
  const double gap = zp_polar_volume_gap(*d, 64);
  CHECK(gap == doctest::Approx(zp_polar_volume(*d, 64) - pi * pi).epsilon(1e-8));
  CHECK(gap > 0.0);
}

TEST_CASE("Z_p grows with p and stays inside K") {
  auto k = normalized(make_lp_ball(2, 3.0));
  for (double a : {0.0, 0.3, 0.9, 2.0}) {
    const UnitDirection u = dir(a);
    double prev = 0.0;
    for (double p : {1.0, 2.0, 4.0, 16.0, 256.0, 4096.0}) {
      const double h = zp_support(*k, p, u);
      CHECK(h > prev);
      CHECK(h < k->support(u.coords()));
      prev = h;
    }
    CHECK(prev == doctest::Approx(k->support(u.coords())).epsilon(5e-3));
  }
}

TEST_CASE("Z_2 is the ellipsoid of the second-moment matrix") {
  Mat A(2, 2);
  A << 1.4, 0.3, 0.3, 0.8;
  auto e = normalized(make_ellipsoid(A));
  const Mat M = second_moment_matrix(*e);
  for (double a : {0.0, 0.7, 1.9}) {
    const UnitDirection u = dir(a);
    const double h = zp_support(*e, 2, u);
    CHECK(h * h == doctest::Approx(u.coords().dot(M * u.coords())).epsilon(1e-9));
  }
}

TEST_CASE("Z_p is linearly covariant") {
  Mat T(2, 2);
  T << 1.5, 0.4, -0.2, 0.6;
  T /= std::sqrt(std::abs(T.determinant()));
  auto k = normalized(make_lp_ball(2, 3.0));
  auto tk = linear_image(k, T);
  for (double a : {0.2, 1.3}) {
    const UnitDirection u = dir(a);
    const Vec w = T.transpose() * u.coords();
    CHECK(zp_support(*tk, 3, u) == doctest::Approx(w.norm() * zp_support(*k, 3, UnitDirection(w))).epsilon(1e-9));
  }
}

TEST_CASE("isotropic constants") {
  CHECK(isotropic_constant(*unit_disc()) == doctest::Approx(1.0 / (2 * std::sqrt(pi))).epsilon(1e-10));
  CHECK(isotropic_constant(*normalized(make_cube(2))) == doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-9));
  const double r = inverse_lyz_ratio(*unit_disc(), 4.0);
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
}

TEST_CASE("floating body support of the disc") {
  auto d = unit_disc();
  CHECK(floating_support(*d, 0.1, dir(0.0)) == doctest::Approx(0.454389058484464).epsilon(1e-9));
  CHECK(floating_support(*d, std::exp(-4.0), dir(2.0)) == doctest::Approx(0.529264830817121070).epsilon(1e-9));
  CHECK_THROWS_AS(floating_support(*d, 1.5, dir(0.0)), GeometryError);
}

TEST_CASE("sandwich ratio on the disc") {
  auto d = unit_disc();
  SandwichResult s = sandwich_ratios(*d, {std::exp(-4.0)}, circle_directions(8));
  CHECK(s.min_ratio == doctest::Approx(1.57768562884610084).epsilon(1e-8));
  CHECK(s.max_ratio == doctest::Approx(1.57768562884610084).epsilon(1e-8));
  CHECK(circle_directions(64).size() == 64);
}

TEST_CASE("Theorem-style right-hand sides agree on the disc") {
  auto [integral, omega_form] = theorem1_rhs(unit_disc());
  CHECK(integral == doctest::Approx(-9.22523427213359057).epsilon(1e-10));
  CHECK(omega_form == doctest::Approx(-9.22523427213359057).epsilon(1e-10));
  CHECK(-pi * pi * std::log(8 / pi) == doctest::Approx(integral).epsilon(1e-12));
}

TEST_CASE("log-Laplace dual") {
  auto d = unit_disc();
  Vec zero = Vec::Zero(2);
  CHECK(std::abs(log_laplace_dual(*d, zero)) < 1e-10);
  Vec x(2);
  x << 0.2, 0.1;
  const double a = log_laplace_dual(*d, x);
  const double b = log_laplace_dual(*d, -x);
  CHECK(a > 0.0);
  CHECK(a == doctest::Approx(b).epsilon(1e-8));
  CHECK(log_laplace_dual(*d, 2.0 * x) > a);
  const UnitDirection u = dir(0.4);
  CHECK(log_laplace_level_support(*d, 2.0, u) < log_laplace_level_support(*d, 4.0, u));
}

TEST_CASE("section derivatives of the unit ball") {
  auto b = make_ball(3);
  const UnitDirection e3(Vec::Unit(3, 2));
  for (double t : {0.1, 0.5, 0.8}) {
    auto [d1, d2] = section_derivatives(*b, e3, t);
    CHECK(d1 == doctest::Approx(-2 * pi * t).epsilon(1e-10));
    CHECK(d2 == doctest::Approx(-2 * pi).epsilon(1e-10));
  }
}

TEST_CASE("maximizer of t^p f(t)") {
  const UnitDirection e1 = dir(0.0);
  for (double p : {1.0, 4.0, 50.0}) {
    CHECK(tp_maximizer(*make_ball(2), e1, p) == doctest::Approx(std::sqrt(p / (p + 1))).epsilon(1e-9));
    CHECK(tp_maximizer(*make_ball(3), UnitDirection(Vec::Unit(3, 0)), p) ==
          doctest::Approx(std::sqrt(p / (p + 2))).epsilon(1e-9));
  }
}

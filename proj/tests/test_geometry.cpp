#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "conegeom/bodies.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"

using namespace conegeom;
using std::numbers::pi;

namespace {

std::vector<UnitDirection> random_directions(int n, int count, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g;
  std::vector<UnitDirection> out;
  for (int k = 0; k < count; ++k) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = g(gen);
    out.emplace_back(v);
  }
  return out;
}

Mat random_matrix(int n, unsigned seed, double max_cond = 10.0) {
  std::mt19937_64 gen(seed);
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

std::vector<BodyPtr> smooth_catalog() {
  Mat A{{2.0, 0.3}, {0.3, 0.7}};
  return {make_ball(2), make_ball(3, 1.7), make_lp_ball(2, 1.5), make_lp_ball(2, 3), make_lp_ball(3, 5),
          make_ellipsoid(A), linear_image(make_lp_ball(2, 3), Mat{{1.0, 0.4}, {-0.2, 1.3}})};
}

}  // namespace

TEST_CASE("unit directions are renormalized") {
  UnitDirection u(Vec{{3.0, 4.0}});
  CHECK(std::abs(u.coords().norm() - 1.0) < 1e-14);
  CHECK(u[0] == doctest::Approx(0.6).epsilon(1e-15));
  for (const auto& d : random_directions(5, 50, 3)) CHECK(std::abs(d.coords().norm() - 1.0) < 1e-14);
}

TEST_CASE("symmetry and radial consistency on the catalog") {
  for (const auto& body : smooth_catalog()) {
    for (const auto& u : random_directions(body->dim(), 40, 11)) {
      const Vec& v = u.coords();
      CHECK(body->support(v) == doctest::Approx(body->support(-v)).epsilon(1e-14));
      CHECK(body->radial(v) == doctest::Approx(body->radial(-v)).epsilon(1e-14));
      const double rho = body->radial(v);
      CHECK(body->contains((1.0 - 1e-9) * rho * v));
      CHECK_FALSE(body->contains((1.0 + 1e-6) * rho * v));
    }
  }
}

TEST_CASE("radial times polar support is one") {
  for (const auto& body : smooth_catalog())
    for (const auto& u : random_directions(body->dim(), 200, 5))
      CHECK(std::abs(body->radial(u.coords()) * polar_support(*body, u) - 1.0) < 1e-10);
}

TEST_CASE("sublinearity spot check") {
  for (const auto& body : smooth_catalog()) {
    const auto a = random_directions(body->dim(), 30, 17), b = random_directions(body->dim(), 30, 19);
    for (std::size_t k = 0; k < a.size(); ++k) {
      const Vec s = a[k].coords() + b[k].coords();
      if (s.norm() < 1e-6) continue;
      const double lhs = body->support(s / s.norm()) * s.norm();
      CHECK(lhs <= body->support(a[k].coords()) + body->support(b[k].coords()) + 1e-12);
    }
  }
}

TEST_CASE("curvature function values") {
  CHECK(curvature_function(*make_ball(3), UnitDirection::axis(3, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  // ellipse with semi-axes 2 and 1: κ at (2, 0) is a/b^2 = 2
  auto ellipse = make_ellipsoid(Mat{{2.0, 0.0}, {0.0, 1.0}});
  CHECK(curvature_function(*ellipse, UnitDirection::axis(2, 0)) == doctest::Approx(0.5).epsilon(1e-12));
  // parametric ellipse curvature κ = ab/(a^2 sin^2 t + b^2 cos^2 t)^{3/2}
  for (double t : {0.3, 1.1, 2.0}) {
    const double a = 2.0, b = 1.0;
    const Vec x{{a * std::cos(t), b * std::sin(t)}};
    const Vec N = ellipse->boundary_normal(x);
    const double kappa = a * b / std::pow(a * a * std::sin(t) * std::sin(t) + b * b * std::cos(t) * std::cos(t), 1.5);
    CHECK(curvature_function(*ellipse, UnitDirection(N)) * kappa == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("l_r ball boundary curvature formula") {
  const Vec x = std::pow(2.0, -0.25) * Vec{{1.0, 1.0}};
  const double kappa = lp_ball_boundary_curvature(4.0, x);
  CHECK(kappa == doctest::Approx(2.5226892457611436).epsilon(1e-13));
  const auto b4 = make_lp_ball(2, 4.0);
  CHECK(kappa * curvature_function(*b4, UnitDirection(lp_ball_normal(4.0, x))) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lp_ball_boundary_curvature(2.0, Vec{{0.6, 0.8}}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lp_ball_boundary_curvature(3.0, Vec{{1.0, 0.0}}) == 0.0);
  CHECK_THROWS_AS(lp_ball_boundary_curvature(3.0, Vec{{0.5, 0.5}}), GeometryError);
  try {
    lp_ball_boundary_curvature(1.5, Vec{{1.0, 0.0}});
    FAIL("expected UndefinedCurvature");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::UndefinedCurvature);
  }
}

TEST_CASE("l_r ball normals") {
  for (double r : {1.5, 3.0, 5.0})
    for (const auto& d : random_directions(3, 30, 23)) {
      const Vec x = make_lp_ball(3, r)->radial(d.coords()) * d.coords();
      const Vec N = lp_ball_normal(r, x);
      CHECK(std::abs(N.norm() - 1.0) < 1e-12);
      CHECK(x.dot(N) == doctest::Approx(make_lp_ball(3, r)->support(N)).epsilon(1e-8));
    }
}

TEST_CASE("B_3^2 curvature on the axis is the reciprocal of the boundary formula") {
  // both vanish / blow up on the axis; off the axis they are reciprocal
  const auto b3 = make_lp_ball(2, 3.0);
  const Vec x{{std::pow(1.0 - std::pow(0.4, 3), 1.0 / 3.0), 0.4}};
  const Vec N = lp_ball_normal(3.0, x);
  CHECK(lp_ball_boundary_curvature(3.0, x) * curvature_function(*b3, UnitDirection(N)) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("analytic curvature matches the finite-difference fallback") {
  for (const auto& body : smooth_catalog()) {
    for (const auto& u : random_directions(body->dim(), 20, 29)) {
      const double analytic = std::exp(body->log_curvature(u.coords()));
      const double fd = restricted_determinant(finite_difference_hessian(*body, u.coords()), u.coords());
      CHECK(fd / analytic == doctest::Approx(1.0).epsilon(1e-5));
    }
  }
}

TEST_CASE("boundary point invariants") {
  for (const auto& body : smooth_catalog()) {
    for (const auto& u : random_directions(body->dim(), 10, 31)) {
      const BoundaryPoint bp = boundary_point_along(*body, u);
      CHECK(bp.support_value > 0.0);
      CHECK(bp.gauss_curvature * curvature_function(*body, UnitDirection(bp.normal)) ==
            doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("curvature errors on non-smooth bodies") {
  try {
    curvature_function(*make_cube(2), UnitDirection::axis(2, 0));
    FAIL("expected NonSmoothBody");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NonSmoothBody);
  }
}

TEST_CASE("polar supports") {
  CHECK(polar_support(*make_ball(4), UnitDirection::axis(4, 2)) == doctest::Approx(1.0));
  for (const auto& u : random_directions(3, 20, 37)) {
    CHECK(polar_support(*make_lp_ball(3, 3.0), u) == doctest::Approx(u.coords().lpNorm<3>()).epsilon(1e-14));
  }
  Mat A{{1.5, 0.2}, {0.2, 0.8}};
  const auto e = make_ellipsoid(A);
  for (const auto& u : random_directions(2, 20, 41)) {
    CHECK(polar_support(*e, u) == doctest::Approx((A.inverse() * u.coords()).norm()).epsilon(1e-12));
    // the support of K° is the max over K of ⟨u, x⟩ after polarity: brute force on a direction grid
    double best = 0.0;
    for (int k = 0; k < 20000; ++k) {
      const Vec w{{std::cos(2 * pi * k / 20000), std::sin(2 * pi * k / 20000)}};
      best = std::max(best, u.coords().dot(w) / e->support(w));
    }
    CHECK(polar_support(*e, u) == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("volumes") {
  CHECK(volume(*make_ball(2)).value == doctest::Approx(pi).epsilon(1e-10));
  CHECK(volume(*make_cross_polytope(3)).value == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK(polar_volume(*make_ball(2, 1.0 / std::sqrt(pi))).value == doctest::Approx(pi * pi).epsilon(1e-10));
  for (int n : {2, 3})
    for (double r : {1.5, 2.0, 3.0, 5.0}) {
      const double closed = std::pow(2.0, n) * std::pow(std::tgamma(1.0 + 1.0 / r), n) / std::tgamma(1.0 + n / r);
      CHECK(volume(*make_lp_ball(n, r)).value == doctest::Approx(closed).epsilon(1e-8));
      CHECK(lp_ball_volume(n, r) == doctest::Approx(closed).epsilon(1e-13));
    }
  CHECK(volume(*make_lp_ball(2, 3.0)).value == doctest::Approx(3.5332775005708999).epsilon(1e-10));
}

TEST_CASE("l_r polar volume closed form") {
  CHECK(lp_ball_polar_volume(2, 2.0) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(lp_ball_polar_volume(3, 2.0) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
  CHECK(lp_ball_polar_volume(2, 3.0) == doctest::Approx(2.7378536239189029).epsilon(1e-13));
  CHECK(polar_volume(*make_lp_ball(2, 3.0)).value == doctest::Approx(lp_ball_polar_volume(2, 3.0)).epsilon(1e-8));
}

TEST_CASE("linear images") {
  const auto ball = make_ball(2);
  const auto same = linear_image(ball, Mat::Identity(2, 2));
  for (const auto& u : random_directions(2, 10, 43)) CHECK(same->support(u.coords()) == doctest::Approx(1.0));
  const auto scaled = linear_image(make_ball(3), 1.5 * Mat::Identity(3, 3));
  CHECK(scaled->support(Vec::Unit(3, 1)) == doctest::Approx(1.5));
  CHECK(volume(*scaled).value == doctest::Approx(std::pow(1.5, 3) * 4.0 * pi / 3.0).epsilon(1e-10));
  CHECK(volume(*linear_image(ball, Mat{{2.0, 0.0}, {0.0, 0.5}})).value == doctest::Approx(pi).epsilon(1e-10));
  for (unsigned seed : {1u, 2u, 3u}) {
    const Mat T = random_matrix(2, seed);
    const auto base = make_lp_ball(2, 3.0);
    CHECK(volume(*linear_image(base, T)).value ==
          doctest::Approx(std::abs(T.determinant()) * lp_ball_volume(2, 3.0)).epsilon(1e-9));
  }
  try {
    linear_image(ball, Mat{{1.0, 2.0}, {2.0, 4.0}});
    FAIL("expected SingularMatrix");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
}

TEST_CASE("normalization") {
  for (const auto& body : {make_lp_ball(2, 3.0), make_ellipsoid(Mat{{2.0, 0.1}, {0.1, 0.4}}), make_cube(2)}) {
    CHECK(volume(*normalized(body)).value == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(*normalized(make_cube(3))->volume_closed_form() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(volume(*normalized(make_lp_ball(3, 1.5))).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ellipsoid validation") {
  CHECK_THROWS_AS(make_ellipsoid(Mat{{1.0, 2.0}, {2.0, 1.0}}), GeometryError);
  CHECK_THROWS_AS(make_ellipsoid(Mat{{1.0, 0.5}, {0.0, 1.0}}), GeometryError);
}

TEST_CASE("sections and caps") {
  const auto disc = make_ball(2);
  CHECK(section_volume(*disc, UnitDirection::angle(0.4), 0.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(section_volume(*make_ball(3), UnitDirection::axis(3, 2), 0.5) == doctest::Approx(0.75 * pi).epsilon(1e-10));
  CHECK(section_volume(*make_lp_ball(2, 4.0), UnitDirection::axis(2, 0), 0.5) ==
        doctest::Approx(1.9679896712654304).epsilon(1e-12));
  CHECK(cap_volume(*disc, UnitDirection::angle(0.1), 0.5) == doctest::Approx(0.6141848493043784).epsilon(1e-10));
  CHECK(cap_volume(*disc, UnitDirection::angle(0.1), 0.0) == doctest::Approx(pi / 2).epsilon(1e-10));
  CHECK(cap_volume(*disc, UnitDirection::angle(0.1), 1.0) == 0.0);
  CHECK_THROWS_AS(section_volume(*disc, UnitDirection::angle(0.0), 1.5), GeometryError);
}

TEST_CASE("cap derivative is minus the section") {
  const auto b3 = make_lp_ball(2, 3.0);
  const UnitDirection th = UnitDirection::angle(0.7);
  for (double t : {0.2, 0.5, 0.8}) {
    const double d = 1e-4;
    const double fd = (cap_volume(*b3, th, t + d) - cap_volume(*b3, th, t - d)) / (2 * d);
    CHECK(-fd == doctest::Approx(section_volume(*b3, th, t)).epsilon(1e-4));
  }
  const auto e3 = make_ellipsoid(Mat{{1.2, 0.1, 0.0}, {0.1, 0.9, 0.0}, {0.0, 0.0, 0.8}});
  const UnitDirection th3(Vec{{0.3, 0.5, 0.8}});
  const double t = 0.3, d = 1e-4;
  CHECK(-(cap_volume(*e3, th3, t + d) - cap_volume(*e3, th3, t - d)) / (2 * d) ==
        doctest::Approx(section_volume(*e3, th3, t)).epsilon(1e-4));
}

TEST_CASE("caps and slab add up to the volume") {
  const auto e = make_ellipsoid(Mat{{1.4, 0.2}, {0.2, 0.6}});
  const UnitDirection th = UnitDirection::angle(1.0);
  const double t = 0.3;
  auto slab_integrand = [&](double s) { return section_volume(*e, th, s); };
  const double slab = integrate_1d(slab_integrand, -t, t, 1e-12).value;
  const double total = cap_volume(*e, th, t) + cap_volume(*e, -th, t) + slab;
  CHECK(total == doctest::Approx(volume(*e).value).epsilon(1e-9));
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conegeom/affine_surface.hpp"
#include "conegeom/bodies.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"

using namespace conegeom;
using std::numbers::pi;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("as_p of the Euclidean ball is the sphere area for every p") {
  for (int n = 2; n <= 4; ++n) {
    auto b = make_ball(n);
    for (double p : {0.5, 1.0, 2.0, 7.0, -0.5 * n}) {
      CHECK(rel(as_p(*b, Exponent::finite(p)).value, sphere_area(n)) < 1e-10);
    }
    CHECK(rel(as_p(*b, Exponent::plus_infinity()).value, sphere_area(n)) < 1e-10);
  }
}

TEST_CASE("as_p goldens for l_r balls") {
  auto b3 = make_lp_ball(2, 3.0);
  auto b15 = make_lp_ball(2, 1.5);
  CHECK(rel(as_p(*b3, Exponent::finite(1)).value, 6.19054191992212032) < 1e-8);
  CHECK(rel(as_p(*b3, Exponent::finite(2)).value, 5.92384391754448833) < 1e-8);
  CHECK(rel(as_p(*b15, Exponent::finite(2)).value, 5.92384391754448833) < 1e-8);
  auto c3 = make_lp_ball(3, 3.0);
  CHECK(rel(as_p(*c3, Exponent::finite(1)).value, 13.3562653989754707) < 1e-6);
}

TEST_CASE("p = 0 and p = inf give n|K| and n|K°|") {
  auto b = make_lp_ball(2, 3.0);
  CHECK(rel(as_p(*b, Exponent::finite(0)).value, 2 * lp_ball_volume(2, 3.0)) < 1e-10);
  CHECK(rel(as_p(*b, Exponent::plus_infinity()).value, 2 * lp_ball_polar_volume(2, 3.0)) < 1e-10);
  // the finite-p integral tends to the same value
  const double big = as_p(*b, Exponent::finite(1e6)).value;
  CHECK(rel(big, 2 * lp_ball_polar_volume(2, 3.0)) < 1e-4);
}

TEST_CASE("duality as_p(K) = as_{n^2/p}(K°)") {
  for (int n : {2, 3}) {
    auto k = make_lp_ball(n, 3.0);
    auto kp = make_lp_ball(n, 1.5);
    for (double p : {0.5, 1.0, 3.0}) {
      const double a = as_p(*k, Exponent::finite(p)).value;
      const double b = as_p(*kp, Exponent::finite(n * n / p)).value;
      CHECK(rel(a, b) < 1e-7);
    }
  }
}

TEST_CASE("ellipsoid scaling law") {
  Mat A(2, 2);
  A << 2.0, 0.3, 0.3, 0.7;
  auto e = make_ellipsoid(A);
  const double det = std::abs(A.determinant());
  for (double p : {0.5, 1.0, 4.0}) {
    const double expect = std::pow(det, (2 - p) / (2 + p)) * 2 * pi;
    CHECK(rel(as_p(*e, Exponent::finite(p)).value, expect) < 1e-8);
  }
}

TEST_CASE("polytopes have zero as_p for p > 0") {
  auto c = make_cube(3);
  CHECK(as_p(*c, Exponent::finite(1)).value == 0.0);
  CHECK_THROWS_AS(as_p(*c, Exponent::finite(-1)), GeometryError);
}

TEST_CASE("p = -n is rejected") {
  auto b = make_ball(2);
  try {
    as_p(*b, Exponent::finite(-2));
    FAIL("expected ExcludedExponent");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::ExcludedExponent);
  }
  CHECK_THROWS_AS(Exponent::finite(std::nan("")), GeometryError);
  CHECK(Exponent::from_double(INFINITY).kind() == Exponent::Kind::plus_infinity);
  CHECK(Exponent::from_double(-INFINITY).to_string() == "-inf");
}

TEST_CASE("sweep agrees with single evaluations") {
  auto b = make_lp_ball(2, 4.0);
  std::vector<double> ps{0.5, 1.0, 2.0, 16.0, 1024.0};
  AspSweep sw = as_p_sweep(*b, ps);
  for (std::size_t j = 0; j < ps.size(); ++j)
    CHECK(rel(sw.value[j], as_p(*b, Exponent::finite(ps[j])).value) < 1e-9);
  CHECK(rel(sw.as_infinity, 2 * lp_ball_polar_volume(2, 4.0)) < 1e-9);
  CHECK(rel(sw.as_zero, 2 * lp_ball_volume(2, 4.0)) < 1e-9);
}

TEST_CASE("monotone quantities move in the stated directions") {
  // for r > 2 the curvature function blows up at the axes and as_p diverges for p < 0
  for (double r : {1.5, 3.0}) {
    std::vector<double> ps{0.0, 0.5, 1.0, 2.0, 4.0, 16.0, 64.0};
    if (r < 2) ps.insert(ps.begin(), {-1.5, -1.0, -0.5});
    auto b = make_lp_ball(2, r);
    MonotoneQuantities q = monotone_quantities(*b, ps);
    for (std::size_t j = 1; j < ps.size(); ++j) {
      CHECK(q.over_as_infinity[j] <= q.over_as_infinity[j - 1] + 1e-10);
      CHECK(q.over_polar_volume[j] <= q.over_polar_volume[j - 1] + 1e-10);
      CHECK(q.over_volume[j] >= q.over_volume[j - 1] - 1e-10);
    }
  }
}

TEST_CASE("mixed as_p with identical bodies reduces to as_p") {
  auto b = make_lp_ball(2, 3.0);
  std::vector<BodyPtr> fam{b, b};
  CHECK(rel(as_p_mixed(fam, 1.0).value, 6.19054191992212032) < 1e-8);
  CHECK(rel(dual_mixed_volume(fam).value, 2 * lp_ball_polar_volume(2, 3.0)) < 1e-9);
}

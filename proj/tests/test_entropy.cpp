#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conegeom/bodies.hpp"
#include "conegeom/entropy.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"

using namespace conegeom;
using std::numbers::pi;

TEST_CASE("KL divergences of the l_3 disc") {
  auto b = make_lp_ball(2, 3.0);
  CHECK(kl_p_q(*b) == doctest::Approx(0.157398402828766044).epsilon(1e-8));
  CHECK(kl_q_p(*b) == doctest::Approx(0.261000749483524424).epsilon(1e-8));
}

TEST_CASE("KL vanishes on ellipsoids") {
  Mat A(2, 2);
  A << 1.5, 0.2, 0.2, 0.6;
  auto e = make_ellipsoid(A);
  CHECK(std::abs(kl_p_q(*e)) < 1e-10);
  CHECK(std::abs(kl_q_p(*e)) < 1e-10);
}

TEST_CASE("entropy identities close") {
  for (auto b : {make_lp_ball(2, 1.5), make_lp_ball(2, 4.0), make_lp_ball(3, 3.0)}) {
    EntropyReport r = entropy_report(b, 4, 0);
    CHECK(std::abs(r.eq1_residual) < 1e-8);
    REQUIRE(r.eq2_residual);
    CHECK(std::abs(*r.eq2_residual) < 1e-8);
    CHECK(std::abs(r.corollary_residual) < 1e-8);
    CHECK(r.corollary_printed_residual > 0.1);
    CHECK(r.p_total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.q_total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.kl_pq >= 0.0);
    CHECK(r.kl_qp >= 0.0);
  }
}

TEST_CASE("densities integrate pointwise to the right formulas on the disc") {
  auto b = make_ball(2);
  Vec x(2);
  x << 0.6, 0.8;
  DensityPair d = densities_at(*b, x, pi, pi);
  CHECK(d.p_density == doctest::Approx(1.0 / (2 * pi)));
  CHECK(d.q_density == doctest::Approx(1.0 / (2 * pi)));
}

TEST_CASE("cone measure of radial caps") {
  auto b = make_lp_ball(2, 3.0);
  Vec e1 = Vec::Unit(2, 0);
  CHECK(cone_measure(*b, {e1, pi / 4}, CapSpace::radial) == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(cone_measure(*b, {e1, pi / 6}, CapSpace::radial) == doctest::Approx(0.1585920452499008244).epsilon(1e-9));
  // full sphere
  CHECK(cone_measure(*b, {e1, pi}, CapSpace::normal) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("equispaced caps lie in the first coordinate plane") {
  auto caps = equispaced_caps(3, 4, 0.3);
  REQUIRE(caps.size() == 4);
  CHECK(caps[1].axis[1] == doctest::Approx(1.0));
  CHECK(std::abs(caps[2].axis[2]) < 1e-15);
}

TEST_CASE("pushforward of P is the cone measure of the polar") {
  auto b = make_lp_ball(2, 3.0);
  PushforwardResult r = pushforward_check(b, equispaced_caps(2, 6, 0.4), {}, 20000);
  CHECK(r.max_residual < 1e-8);
  REQUIRE(r.max_mc_z);
  CHECK(*r.max_mc_z < 5.0);
}

TEST_CASE("cone measure samples lie on the boundary") {
  for (auto b : {make_lp_ball(3, 3.0), make_ball(2)}) {
    auto s = sample_cone_measure(b, 200, 7);
    REQUIRE(s.size() == 200);
    for (const auto& c : s) CHECK(b->gauge(c.x) == doctest::Approx(1.0).epsilon(1e-10));
  }
  auto a = sample_cone_measure(make_lp_ball(2, 3.0), 50, 11);
  auto c = sample_cone_measure(make_lp_ball(2, 3.0), 50, 11);
  CHECK((a[17].x - c[17].x).norm() == 0.0);
}

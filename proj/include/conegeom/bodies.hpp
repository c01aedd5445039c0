#pragma once

#include <memory>
#include <string>

#include "conegeom/body.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

/// Centered Euclidean ball of radius R.
class Ball final : public ConvexBody {
 public:
  Ball(int n, double radius = 1.0);

  int dim() const override { return n_; }
  Smoothness smoothness() const override { return Smoothness::c2_plus; }
  std::string describe() const override;
  double radius() const { return radius_; }

  double support(const Vec&) const override { return radius_; }
  double radial(const Vec&) const override { return radius_; }
  Vec support_gradient(const Vec& u) const override { return radius_ * u; }
  Mat support_hessian(const Vec& u) const override;
  bool has_analytic_hessian() const override { return true; }
  double log_curvature(const Vec&) const override;
  Vec boundary_normal(const Vec& x) const override { return x.normalized(); }
  bool contains(const Vec& x) const override { return x.norm() <= radius_; }

  std::shared_ptr<const ConvexBody> polar() const override;
  std::optional<double> volume_closed_form() const override;
  std::optional<double> omega_closed_form() const override;

 private:
  int n_;
  double radius_;
};

/// B_r^n = {x : ‖x‖_r ≤ 1}, 1 < r < ∞.
class LpBall final : public ConvexBody {
 public:
  LpBall(int n, double r);

  int dim() const override { return n_; }
  Smoothness smoothness() const override { return Smoothness::c2_plus; }
  std::string describe() const override;
  double exponent() const { return r_; }
  double conjugate_exponent() const { return s_; }

  double support(const Vec& u) const override;
  double radial(const Vec& u) const override;
  Vec support_gradient(const Vec& u) const override;
  Mat support_hessian(const Vec& u) const override;
  bool has_analytic_hessian() const override { return true; }
  double log_curvature(const Vec& u) const override;
  Vec boundary_normal(const Vec& x) const override;
  bool contains(const Vec& x) const override;

  std::shared_ptr<const ConvexBody> polar() const override;
  std::optional<double> volume_closed_form() const override;
  std::optional<double> omega_closed_form() const override;

 private:
  int n_;
  double r_, s_;
};

/// [-1, 1]^n.
class Cube final : public ConvexBody {
 public:
  explicit Cube(int n);

  int dim() const override { return n_; }
  Smoothness smoothness() const override { return Smoothness::polytope; }
  std::string describe() const override;

  double support(const Vec& u) const override { return u.lpNorm<1>(); }
  double radial(const Vec& u) const override { return 1.0 / u.lpNorm<Eigen::Infinity>(); }
  Vec support_gradient(const Vec& u) const override;
  Vec boundary_normal(const Vec& x) const override;
  bool contains(const Vec& x) const override { return x.lpNorm<Eigen::Infinity>() <= 1.0; }
  RadialSample sample_radial(const Vec& v) const override;
  Vec radial_reference(const Vec& u) const override;

  std::shared_ptr<const ConvexBody> polar() const override;
  std::optional<double> volume_closed_form() const override;
  std::optional<double> omega_closed_form() const override { return 0.0; }

 private:
  int n_;
};

/// B_1^n.
class CrossPolytope final : public ConvexBody {
 public:
  explicit CrossPolytope(int n);

  int dim() const override { return n_; }
  Smoothness smoothness() const override { return Smoothness::polytope; }
  std::string describe() const override;

  double support(const Vec& u) const override { return u.lpNorm<Eigen::Infinity>(); }
  double radial(const Vec& u) const override { return 1.0 / u.lpNorm<1>(); }
  Vec support_gradient(const Vec& u) const override;
  Vec boundary_normal(const Vec& x) const override;
  bool contains(const Vec& x) const override { return x.lpNorm<1>() <= 1.0; }
  NormalSample sample_normal(const Vec& v) const override;
  Vec normal_reference(const Vec& u) const override;

  std::shared_ptr<const ConvexBody> polar() const override;
  std::optional<double> volume_closed_form() const override;
  std::optional<double> omega_closed_form() const override { return 0.0; }

 private:
  int n_;
};

/// T(K) for invertible T. Charts of K are carried along so singular sets
/// stay on reference hyperplanes.
class LinearImage final : public ConvexBody {
 public:
  LinearImage(BodyPtr base, Mat T, std::string label = {});

  int dim() const override { return base_->dim(); }
  Smoothness smoothness() const override { return base_->smoothness(); }
  std::string describe() const override;
  const BodyPtr& base() const { return base_; }
  const Mat& matrix() const { return t_; }
  double abs_det() const { return std::exp(log_abs_det_); }
  double log_abs_det() const { return log_abs_det_; }

  double support(const Vec& u) const override;
  double radial(const Vec& u) const override;
  Vec support_gradient(const Vec& u) const override;
  Mat support_hessian(const Vec& u) const override;
  bool has_analytic_hessian() const override { return base_->has_analytic_hessian(); }
  double log_curvature(const Vec& u) const override;
  Vec boundary_normal(const Vec& x) const override;
  bool contains(const Vec& x) const override { return base_->contains(t_inv_ * x); }

  NormalSample sample_normal(const Vec& v) const override;
  RadialSample sample_radial(const Vec& v) const override;
  Vec normal_reference(const Vec& u) const override;
  Vec radial_reference(const Vec& u) const override;

  std::shared_ptr<const ConvexBody> polar() const override;
  std::optional<double> volume_closed_form() const override;
  std::optional<double> omega_closed_form() const override;

 private:
  BodyPtr base_;
  Mat t_, t_inv_, t_inv_t_;
  double log_abs_det_;
  std::string label_;
};

/// K° built from K alone: h_{K°} = 1/ρ_K, ρ_{K°} = 1/h_K. Curvature comes
/// from the finite-difference Hessian, so accuracy is lower.
class NumericalPolar final : public ConvexBody {
 public:
  explicit NumericalPolar(BodyPtr base) : base_(std::move(base)) {}

  int dim() const override { return base_->dim(); }
  Smoothness smoothness() const override { return base_->smoothness(); }
  std::string describe() const override { return "numerical_polar(" + base_->describe() + ")"; }

  double support(const Vec& u) const override { return 1.0 / base_->radial(u); }
  double radial(const Vec& u) const override { return 1.0 / base_->support(u); }
  std::shared_ptr<const ConvexBody> polar() const override { return base_; }

 private:
  BodyPtr base_;
};

BodyPtr make_ball(int n, double radius = 1.0);
/// r = 1 gives the cross-polytope, r = +inf the cube.
BodyPtr make_lp_ball(int n, double r);
BodyPtr make_cube(int n);
BodyPtr make_cross_polytope(int n);
/// A(B_2^n) for symmetric positive-definite A.
BodyPtr make_ellipsoid(const Mat& A);
BodyPtr linear_image(BodyPtr base, const Mat& T);
/// λK with |λK| = 1.
BodyPtr normalized(BodyPtr base, const QuadratureConfig& cfg = {});
/// Catalog polar if available, otherwise NumericalPolar when allowed.
BodyPtr polar_of(const BodyPtr& body, bool allow_numerical);

/// Gauss curvature of ∂B_r^n at x.
double lp_ball_boundary_curvature(double r, const Vec& x);
/// Outer unit normal of ∂B_r^n at x.
Vec lp_ball_normal(double r, const Vec& x);
double lp_ball_volume(int n, double r);
/// |B_{r'}^n| with 1/r + 1/r' = 1.
double lp_ball_polar_volume(int n, double r);
double unit_ball_volume(int n);
double sphere_area(int n);

}  // namespace conegeom

#include "conegeom/bodies.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"

namespace conegeom {

namespace {

// ‖u‖_q with scaling so large or tiny q stays finite
double lp_norm(const Vec& u, double q) {
  const double m = u.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (int i = 0; i < u.size(); ++i) s += std::pow(std::abs(u[i]) / m, q);
  return m * std::pow(s, 1.0 / q);
}

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

Vec rotate45(const Vec& v, double sign) {
  const double c = std::numbers::sqrt2 / 2.0;
  Vec u(2);
  u << c * v[0] - sign * c * v[1], sign * c * v[0] + c * v[1];
  return u;
}

}  // namespace

double unit_ball_volume(int n) { return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0); }

double sphere_area(int n) { return n * unit_ball_volume(n); }

// ---------------------------------------------------------------- Ball

Ball::Ball(int n, double radius) : n_(n), radius_(radius) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "dimension must be at least 2");
  if (!(radius > 0.0)) fail(ErrorKind::DegenerateBody, "radius must be positive");
}

std::string Ball::describe() const {
  return "ball(n=" + std::to_string(n_) + (radius_ == 1.0 ? "" : ",R=" + fmt(radius_)) + ")";
}

Mat Ball::support_hessian(const Vec& u) const {
  return radius_ * (Mat::Identity(n_, n_) - u * u.transpose());
}

double Ball::log_curvature(const Vec&) const { return (n_ - 1) * std::log(radius_); }

std::shared_ptr<const ConvexBody> Ball::polar() const { return std::make_shared<Ball>(n_, 1.0 / radius_); }

std::optional<double> Ball::volume_closed_form() const { return unit_ball_volume(n_) * std::pow(radius_, n_); }

std::optional<double> Ball::omega_closed_form() const { return std::pow(radius_, 2.0 * n_ * n_); }

// ---------------------------------------------------------------- LpBall

LpBall::LpBall(int n, double r) : n_(n), r_(r), s_(r / (r - 1.0)) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "dimension must be at least 2");
  if (!(r > 1.0) || !std::isfinite(r)) fail(ErrorKind::DomainError, "smooth l_r ball needs 1 < r < inf");
}

std::string LpBall::describe() const { return "lp_ball(n=" + std::to_string(n_) + ",r=" + fmt(r_) + ")"; }

double LpBall::support(const Vec& u) const { return lp_norm(u, s_); }

double LpBall::radial(const Vec& u) const { return 1.0 / lp_norm(u, r_); }

Vec LpBall::support_gradient(const Vec& u) const {
  const double h = lp_norm(u, s_);
  Vec g(n_);
  for (int i = 0; i < n_; ++i) g[i] = sgn(u[i]) * std::pow(std::abs(u[i]) / h, s_ - 1.0);
  return g;
}

Mat LpBall::support_hessian(const Vec& u) const {
  const double h = lp_norm(u, s_);
  Vec g = support_gradient(u);
  Mat hess = -g * g.transpose();
  for (int i = 0; i < n_; ++i) hess(i, i) += std::pow(std::abs(u[i]) / h, s_ - 2.0);
  return (s_ - 1.0) / h * hess;
}

double LpBall::log_curvature(const Vec& u) const {
  // with x = ∇h(u): Σ|x_i|^{2r-2} = 1/‖u‖_s^2 and log|x_i| = (s-1)(log|u_i| - log‖u‖_s)
  const double log_h = std::log(lp_norm(u, s_));
  double lf = -(n_ + 1) * log_h - (n_ - 1) * std::log(r_ - 1.0);
  if (r_ != 2.0) {
    double sum_log = 0.0;
    for (int i = 0; i < n_; ++i) sum_log += std::log(std::abs(u[i]));
    lf -= (r_ - 2.0) / (r_ - 1.0) * (sum_log - n_ * log_h);
  }
  return lf;
}

Vec LpBall::boundary_normal(const Vec& x) const { return lp_ball_normal(r_, x); }

bool LpBall::contains(const Vec& x) const { return lp_norm(x, r_) <= 1.0; }

std::shared_ptr<const ConvexBody> LpBall::polar() const { return std::make_shared<LpBall>(n_, s_); }

std::optional<double> LpBall::volume_closed_form() const { return lp_ball_volume(n_, r_); }

std::optional<double> LpBall::omega_closed_form() const { return omega_lp_closed_form(n_, r_); }

// ---------------------------------------------------------------- Cube

Cube::Cube(int n) : n_(n) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "dimension must be at least 2");
}

std::string Cube::describe() const { return "cube(n=" + std::to_string(n_) + ")"; }

Vec Cube::support_gradient(const Vec& u) const {
  Vec g(n_);
  for (int i = 0; i < n_; ++i) g[i] = sgn(u[i]);
  return g;
}

Vec Cube::boundary_normal(const Vec& x) const {
  int k = 0;
  x.cwiseAbs().maxCoeff(&k);
  Vec e = Vec::Zero(n_);
  e[k] = sgn(x[k]);
  return e;
}

RadialSample Cube::sample_radial(const Vec& v) const {
  if (n_ != 2) return ConvexBody::sample_radial(v);
  // put the corner directions on the axes of the reference circle
  const Vec u = rotate45(v, 1.0);
  return {u, radial(u), 1.0};
}

Vec Cube::radial_reference(const Vec& u) const { return n_ == 2 ? rotate45(u, -1.0) : u; }

std::shared_ptr<const ConvexBody> Cube::polar() const { return std::make_shared<CrossPolytope>(n_); }

std::optional<double> Cube::volume_closed_form() const { return std::ldexp(1.0, n_); }

// ---------------------------------------------------------------- CrossPolytope

CrossPolytope::CrossPolytope(int n) : n_(n) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "dimension must be at least 2");
}

std::string CrossPolytope::describe() const { return "cross_polytope(n=" + std::to_string(n_) + ")"; }

Vec CrossPolytope::support_gradient(const Vec& u) const {
  int k = 0;
  u.cwiseAbs().maxCoeff(&k);
  Vec e = Vec::Zero(n_);
  e[k] = sgn(u[k]);
  return e;
}

Vec CrossPolytope::boundary_normal(const Vec& x) const {
  Vec g(n_);
  for (int i = 0; i < n_; ++i) g[i] = sgn(x[i]);
  return g.normalized();
}

NormalSample CrossPolytope::sample_normal(const Vec& v) const {
  if (n_ != 2) return ConvexBody::sample_normal(v);
  const Vec u = rotate45(v, 1.0);
  return {u, support(u), std::numeric_limits<double>::quiet_NaN(), 1.0};
}

Vec CrossPolytope::normal_reference(const Vec& u) const { return n_ == 2 ? rotate45(u, -1.0) : u; }

std::shared_ptr<const ConvexBody> CrossPolytope::polar() const { return std::make_shared<Cube>(n_); }

std::optional<double> CrossPolytope::volume_closed_form() const {
  return std::ldexp(1.0, n_) / std::tgamma(n_ + 1.0);
}

// ---------------------------------------------------------------- LinearImage

LinearImage::LinearImage(BodyPtr base, Mat T, std::string label)
    : base_(std::move(base)), t_(std::move(T)), label_(std::move(label)) {
  const int n = base_->dim();
  if (t_.rows() != n || t_.cols() != n) fail(ErrorKind::DimensionMismatch, "matrix size does not match body");
  Eigen::FullPivLU<Mat> lu(t_);
  const double scale = t_.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || lu.rank() < n || std::abs(lu.determinant()) <= 1e-13 * std::pow(scale, n))
    fail(ErrorKind::SingularMatrix, "linear map is singular");
  t_inv_ = lu.inverse();
  t_inv_t_ = t_inv_.transpose();
  log_abs_det_ = std::log(std::abs(lu.determinant()));
}

std::string LinearImage::describe() const {
  if (!label_.empty()) return label_;
  std::ostringstream s;
  s.precision(12);
  s << "linear_image(" << base_->describe() << ",[";
  for (int i = 0; i < t_.rows(); ++i) {
    s << (i ? ",[" : "[");
    for (int j = 0; j < t_.cols(); ++j) s << (j ? "," : "") << t_(i, j);
    s << "]";
  }
  s << "])";
  return s.str();
}

double LinearImage::support(const Vec& u) const {
  const Vec w = t_.transpose() * u;
  const double nw = w.norm();
  return nw * base_->support(w / nw);
}

double LinearImage::radial(const Vec& u) const {
  const Vec w = t_inv_ * u;
  const double nw = w.norm();
  return base_->radial(w / nw) / nw;
}

Vec LinearImage::support_gradient(const Vec& u) const {
  const Vec w = t_.transpose() * u;
  return t_ * base_->support_gradient(w / w.norm());
}

Mat LinearImage::support_hessian(const Vec& u) const {
  const Vec w = t_.transpose() * u;
  const double nw = w.norm();
  return t_ * base_->support_hessian(w / nw) * t_.transpose() / nw;
}

double LinearImage::log_curvature(const Vec& u) const {
  const Vec w = t_.transpose() * u;
  const double nw = w.norm();
  return 2.0 * log_abs_det_ + base_->log_curvature(w / nw) - (base_->dim() + 1) * std::log(nw);
}

Vec LinearImage::boundary_normal(const Vec& x) const {
  return (t_inv_t_ * base_->boundary_normal(t_inv_ * x)).normalized();
}

NormalSample LinearImage::sample_normal(const Vec& v) const {
  const int n = base_->dim();
  const NormalSample s = base_->sample_normal(v);
  const Vec w = t_inv_t_ * s.u;
  const double nw = w.norm();
  return {w / nw, s.support / nw, 2.0 * log_abs_det_ + s.log_curvature + (n + 1) * std::log(nw),
          s.jacobian * std::exp(-log_abs_det_ - n * std::log(nw))};
}

RadialSample LinearImage::sample_radial(const Vec& v) const {
  const int n = base_->dim();
  const RadialSample s = base_->sample_radial(v);
  const Vec w = t_ * s.u;
  const double nw = w.norm();
  return {w / nw, s.radial * nw, s.jacobian * std::exp(log_abs_det_ - n * std::log(nw))};
}

Vec LinearImage::normal_reference(const Vec& u) const {
  return base_->normal_reference((t_.transpose() * u).normalized());
}

Vec LinearImage::radial_reference(const Vec& u) const { return base_->radial_reference((t_inv_ * u).normalized()); }

std::shared_ptr<const ConvexBody> LinearImage::polar() const {
  BodyPtr bp = base_->polar();
  if (!bp) return nullptr;
  return std::make_shared<LinearImage>(bp, t_inv_t_, label_.empty() ? std::string{} : "polar(" + label_ + ")");
}

std::optional<double> LinearImage::volume_closed_form() const {
  auto v = base_->volume_closed_form();
  if (!v) return std::nullopt;
  return *v * std::exp(log_abs_det_);
}

std::optional<double> LinearImage::omega_closed_form() const {
  auto v = base_->omega_closed_form();
  if (!v) return std::nullopt;
  return *v * std::exp(2.0 * base_->dim() * log_abs_det_);
}

// ---------------------------------------------------------------- factories

BodyPtr make_ball(int n, double radius) { return std::make_shared<Ball>(n, radius); }

BodyPtr make_lp_ball(int n, double r) {
  if (r == 1.0) return make_cross_polytope(n);
  if (std::isinf(r) && r > 0) return make_cube(n);
  return std::make_shared<LpBall>(n, r);
}

BodyPtr make_cube(int n) { return std::make_shared<Cube>(n); }

BodyPtr make_cross_polytope(int n) { return std::make_shared<CrossPolytope>(n); }

BodyPtr make_ellipsoid(const Mat& A) {
  if (A.rows() != A.cols()) fail(ErrorKind::DimensionMismatch, "ellipsoid matrix must be square");
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * A.cwiseAbs().maxCoeff())
    fail(ErrorKind::InvalidConfig, "ellipsoid matrix must be symmetric");
  Eigen::LLT<Mat> llt(A);
  if (llt.info() != Eigen::Success) fail(ErrorKind::InvalidConfig, "ellipsoid matrix must be positive definite");
  std::ostringstream s;
  s.precision(12);
  s << "ellipsoid([";
  for (int i = 0; i < A.rows(); ++i) {
    s << (i ? ",[" : "[");
    for (int j = 0; j < A.cols(); ++j) s << (j ? "," : "") << A(i, j);
    s << "]";
  }
  s << "])";
  return std::make_shared<LinearImage>(make_ball(static_cast<int>(A.rows())), A, s.str());
}

BodyPtr linear_image(BodyPtr base, const Mat& T) { return std::make_shared<LinearImage>(std::move(base), T); }

BodyPtr normalized(BodyPtr base, const QuadratureConfig& cfg) {
  const int n = base->dim();
  double vol;
  if (auto v = base->volume_closed_form())
    vol = *v;
  else
    vol = volume(*base, cfg).value;
  const double lambda = std::pow(vol, -1.0 / n);
  return std::make_shared<LinearImage>(base, lambda * Mat::Identity(n, n), "normalized(" + base->describe() + ")");
}

BodyPtr polar_of(const BodyPtr& body, bool allow_numerical) {
  if (BodyPtr p = body->polar()) return p;
  if (!allow_numerical) fail(ErrorKind::PolarNotInCatalog, "no closed-form polar for " + body->describe());
  return std::make_shared<NumericalPolar>(body);
}

// ---------------------------------------------------------------- ℓ_r formulas

double lp_ball_boundary_curvature(double r, const Vec& x) {
  if (!(r > 1.0) || !std::isfinite(r)) fail(ErrorKind::DomainError, "need 1 < r < inf");
  if (std::abs(lp_norm(x, r) - 1.0) > 1e-10) fail(ErrorKind::OffBoundary, "point is not on the l_r sphere");
  const int n = static_cast<int>(x.size());
  double prod = 1.0, sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(x[i]);
    if (a == 0.0 && r < 2.0) fail(ErrorKind::UndefinedCurvature, "curvature blows up on coordinate hyperplanes for r < 2");
    prod *= r == 2.0 ? 1.0 : std::pow(a, r - 2.0);
    sum += std::pow(a, 2.0 * r - 2.0);
  }
  return std::pow(r - 1.0, n - 1) * prod / std::pow(sum, 0.5 * (n + 1));
}

Vec lp_ball_normal(double r, const Vec& x) {
  Vec g(x.size());
  for (int i = 0; i < x.size(); ++i) g[i] = sgn(x[i]) * std::pow(std::abs(x[i]), r - 1.0);
  return g / g.norm();
}

double lp_ball_volume(int n, double r) {
  if (std::isinf(r)) return std::ldexp(1.0, n);
  return std::exp(n * std::log(2.0) + n * std::lgamma(1.0 + 1.0 / r) - std::lgamma(1.0 + n / r));
}

double lp_ball_polar_volume(int n, double r) {
  if (!(r > 1.0) || !std::isfinite(r)) fail(ErrorKind::DomainError, "need 1 < r < inf");
  const double a = (r - 1.0) / r;
  return std::exp(n * std::log(2.0) + (n - 1) * std::log(r - 1.0) - std::log(n) - (n - 1) * std::log(r) +
                  n * std::lgamma(a) - std::lgamma(n * a));
}

}  // namespace conegeom

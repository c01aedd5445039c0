#include "conegeom/body.hpp"

#include <cmath>
#include <limits>

#include "conegeom/errors.hpp"

namespace conegeom {

namespace {

double homogeneous_support(const ConvexBody& body, const Vec& x) {
  const double r = x.norm();
  return r * body.support(x / r);
}

Mat fd_hessian_at_step(const ConvexBody& body, const Vec& u, double d) {
  const int n = static_cast<int>(u.size());
  Mat hess(n, n);
  const double h0 = homogeneous_support(body, u);
  for (int i = 0; i < n; ++i) {
    Vec xp = u, xm = u;
    xp[i] += d;
    xm[i] -= d;
    hess(i, i) = (homogeneous_support(body, xp) - 2.0 * h0 + homogeneous_support(body, xm)) / (d * d);
    for (int j = 0; j < i; ++j) {
      Vec a = u, b = u, c = u, e = u;
      a[i] += d; a[j] += d;
      b[i] += d; b[j] -= d;
      c[i] -= d; c[j] += d;
      e[i] -= d; e[j] -= d;
      const double v = (homogeneous_support(body, a) - homogeneous_support(body, b) -
                        homogeneous_support(body, c) + homogeneous_support(body, e)) /
                       (4.0 * d * d);
      hess(i, j) = hess(j, i) = v;
    }
  }
  return hess;
}

Vec fd_gradient_at_step(const ConvexBody& body, const Vec& u, double d) {
  const int n = static_cast<int>(u.size());
  Vec g(n);
  for (int i = 0; i < n; ++i) {
    Vec xp = u, xm = u;
    xp[i] += d;
    xm[i] -= d;
    g[i] = (homogeneous_support(body, xp) - homogeneous_support(body, xm)) / (2.0 * d);
  }
  return g;
}

}  // namespace

Mat finite_difference_hessian(const ConvexBody& body, const Vec& u) {
  const double d = 1e-4 * body.support(u);
  // one Richardson step on the O(d^2) error
  return (4.0 * fd_hessian_at_step(body, u, 0.5 * d) - fd_hessian_at_step(body, u, d)) / 3.0;
}

Vec finite_difference_gradient(const ConvexBody& body, const Vec& u) {
  const double d = 1e-4 * body.support(u);
  return (4.0 * fd_gradient_at_step(body, u, 0.5 * d) - fd_gradient_at_step(body, u, d)) / 3.0;
}

double restricted_determinant(const Mat& hessian, const Vec& u) {
  const int n = static_cast<int>(u.size());
  // Householder reflector sending e_n to ±u; its first n-1 columns span u^⊥
  Vec v = u;
  const double s = u[n - 1] >= 0.0 ? 1.0 : -1.0;
  v[n - 1] += s;
  const double vv = v.squaredNorm();
  Mat q = Mat::Identity(n, n) - (2.0 / vv) * v * v.transpose();
  Mat basis = q.leftCols(n - 1);
  Mat restricted = basis.transpose() * hessian * basis;
  return restricted.determinant();
}

Vec ConvexBody::support_gradient(const Vec& u) const { return finite_difference_gradient(*this, u); }

Mat ConvexBody::support_hessian(const Vec& u) const { return finite_difference_hessian(*this, u); }

double ConvexBody::log_curvature(const Vec& u) const {
  if (smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, describe() + " has no curvature function");
  const double det = restricted_determinant(support_hessian(u), u);
  if (!(det > 0.0)) fail(ErrorKind::SingularHessian, "restricted Hessian determinant is not positive");
  return std::log(det);
}

Vec ConvexBody::boundary_normal(const Vec& x) const {
  const int n = static_cast<int>(x.size());
  const double d = 1e-6 * x.norm();
  Vec g(n);
  for (int i = 0; i < n; ++i) {
    Vec xp = x, xm = x;
    xp[i] += d;
    xm[i] -= d;
    g[i] = gauge(xp) - gauge(xm);
  }
  return g.normalized();
}

double ConvexBody::gauge(const Vec& x) const {
  const double r = x.norm();
  if (r == 0.0) return 0.0;
  return r / radial(x / r);
}

NormalSample ConvexBody::sample_normal(const Vec& v) const {
  const double lf = smoothness() == Smoothness::c2_plus ? log_curvature(v)
                                                        : std::numeric_limits<double>::quiet_NaN();
  return {v, support(v), lf, 1.0};
}

RadialSample ConvexBody::sample_radial(const Vec& v) const { return {v, radial(v), 1.0}; }

}  // namespace conegeom

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "conegeom/types.hpp"

namespace conegeom {

enum class Smoothness { c2_plus, polytope, generic };

/// Quantities at the outer normal u reached from a reference direction v.
/// `jacobian` is dσ(u)/dσ(v) for the body's normal chart.
struct NormalSample {
  Vec u;
  double support;
  double log_curvature;  // log f(u); NaN when the body is not C2_plus
  double jacobian;
};

/// Quantities at the radial direction u reached from a reference direction v.
struct RadialSample {
  Vec u;
  double radial;
  double jacobian;
};

/// A symmetric convex body with the origin in its interior.
///
/// Direction arguments are unit vectors. Support gradients and Hessians are
/// those of the 1-homogeneous extension of h. Bodies are immutable and may be
/// shared freely between threads.
///
/// The sample_* hooks let a body parametrize S^{n-1} by a chart that places
/// its singular set (where ρ or f lose smoothness) on coordinate hyperplanes
/// of the reference sphere. The orthant quadrature rules then see every
/// singularity on a cell boundary.
class ConvexBody {
 public:
  virtual ~ConvexBody() = default;

  virtual int dim() const = 0;
  virtual Smoothness smoothness() const = 0;
  virtual std::string describe() const = 0;

  virtual double support(const Vec& u) const = 0;
  virtual double radial(const Vec& u) const = 0;

  /// Boundary point with outer normal u.
  virtual Vec support_gradient(const Vec& u) const;
  virtual Mat support_hessian(const Vec& u) const;
  virtual bool has_analytic_hessian() const { return false; }

  /// log of the curvature function f(u) = 1/κ at the boundary point with normal u.
  virtual double log_curvature(const Vec& u) const;

  /// Outer unit normal at a boundary point x.
  virtual Vec boundary_normal(const Vec& x) const;

  /// Minkowski gauge ‖x‖_K.
  double gauge(const Vec& x) const;
  virtual bool contains(const Vec& x) const { return gauge(x) <= 1.0; }

  virtual NormalSample sample_normal(const Vec& v) const;
  virtual RadialSample sample_radial(const Vec& v) const;
  /// Inverse charts; used only to place breakpoints, so plain accuracy suffices.
  virtual Vec normal_reference(const Vec& u) const { return u; }
  virtual Vec radial_reference(const Vec& u) const { return u; }

  /// Exact polar body when the catalog knows it; nullptr otherwise.
  virtual std::shared_ptr<const ConvexBody> polar() const { return nullptr; }

  virtual std::optional<double> volume_closed_form() const { return std::nullopt; }
  virtual std::optional<double> omega_closed_form() const { return std::nullopt; }
};

using BodyPtr = std::shared_ptr<const ConvexBody>;

/// Central differences on the 1-homogeneous extension, one Richardson step.
Mat finite_difference_hessian(const ConvexBody& body, const Vec& u);
Vec finite_difference_gradient(const ConvexBody& body, const Vec& u);

/// det of the Hessian restricted to u^⊥, in a Householder basis of u^⊥.
double restricted_determinant(const Mat& hessian, const Vec& u);

}  // namespace conegeom

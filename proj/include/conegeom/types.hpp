#pragma once

#include <Eigen/Dense>

namespace conegeom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A point of S^{n-1}. Construction renormalizes the input.
class UnitDirection {
 public:
  explicit UnitDirection(Vec v);

  static UnitDirection axis(int n, int i);
  /// (cos a, sin a) in the plane.
  static UnitDirection angle(double a);

  int dim() const { return static_cast<int>(v_.size()); }
  const Vec& coords() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  UnitDirection operator-() const { return UnitDirection(Vec(-v_), 0); }

 private:
  UnitDirection(Vec v, int) : v_(std::move(v)) {}
  Vec v_;
};

}  // namespace conegeom

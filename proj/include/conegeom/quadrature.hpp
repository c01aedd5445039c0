#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "conegeom/types.hpp"

namespace conegeom {

struct QuadratureConfig {
  double sphere_tol = 1e-10;
  // node budget for one sphere rule
  std::size_t max_nodes = 6'000'000;
  std::uint64_t mc_samples = 10'000'000;
  std::uint64_t seed = 42;
  int threads = 1;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t nodes_used = 0;
};

enum class RuleKind { product_tanh_sinh, product_gauss, quasi_monte_carlo };

/// Nodes on [0, π/2] with complements stored separately, so points next to
/// the right endpoint keep full relative accuracy in π/2 − θ.
struct AngleRule {
  std::vector<double> sin_theta, cos_theta, weight;
  std::size_t size() const { return weight.size(); }

  /// Double-exponential rule, step 2^-level.
  static AngleRule tanh_sinh(int level);
  static AngleRule gauss_legendre(int points);
};

/// Quadrature on S^{n-1}.
///
/// Product rules split the sphere into its 2^n coordinate orthants and use
/// hyperspherical angles in [0, π/2]^{n-1} on each. Orthant boundaries are
/// coordinate hyperplanes, so integrands that are only piecewise smooth across
/// them (ℓ_r norms, their curvature) still converge fast. The QMC rule is a
/// shifted Halton sequence mapped through the normal quantile.
class SphereRule {
 public:
  static SphereRule product_tanh_sinh(int n, int level);
  static SphereRule product_gauss(int n, int level);
  static SphereRule quasi_monte_carlo(int n, int level, std::uint64_t seed);
  /// The default family for dimension n.
  static SphereRule for_dimension(int n, int level, std::uint64_t seed = 42);
  static int first_level(int n);
  static int last_level(int n);

  int dim() const { return n_; }
  RuleKind kind() const { return kind_; }
  int level() const { return level_; }
  std::size_t size() const { return size_; }

  /// i-th node and weight; weights sum to |S^{n-1}|.
  void node(std::size_t i, Vec& u, double& w) const;

  std::vector<Vec> nodes() const;
  std::vector<double> weights() const;

 private:
  SphereRule() = default;
  int n_ = 0;
  RuleKind kind_ = RuleKind::product_tanh_sinh;
  int level_ = 0;
  std::size_t size_ = 0;
  std::size_t per_orthant_ = 0;
  AngleRule angles_;
  std::vector<double> shift_;
  double qmc_weight_ = 0.0;
};

/// Writes m integrand values at a node into out[0..m).
using MultiIntegrand = std::function<void(const Vec& u, double* out)>;
using ScalarIntegrand = std::function<double(const Vec& u)>;

/// Weighted sums of m integrands over one rule, in deterministic chunked
/// pairwise order (bitwise independent of the thread count).
std::vector<double> apply_rule(const SphereRule& rule, int m, const MultiIntegrand& f, int threads = 1);

/// Refines the default rule for dimension n until consecutive levels agree to
/// sphere_tol·max(1, |I|) in every component.
std::vector<IntegralResult> integrate_sphere_multi(int n, int m, const MultiIntegrand& f,
                                                   const QuadratureConfig& cfg);
IntegralResult integrate_sphere(int n, const ScalarIntegrand& f, const QuadratureConfig& cfg);
/// One rule, error estimated against the next coarser rule of the same family.
IntegralResult integrate_sphere(const ScalarIntegrand& f, const SphereRule& rule, int threads = 1);

struct Integral1D {
  double value;
  double error_estimate;
};

/// Adaptive Gauss–Kronrod on [a, b]. Stops once the error estimate is below
/// max(rel_tol·|I|, abs_tol); abs_tol is the floor for integrands with roundoff noise.
Integral1D integrate_1d(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12,
                        double abs_tol = 0.0);
/// Adaptive Gauss–Kronrod on [a, b] with interior breakpoints.
Integral1D integrate_1d(const std::function<double(double)>& f, std::vector<double> points, double rel_tol = 1e-12,
                        double abs_tol = 0.0);
/// Double-exponential rule; tolerates endpoint singularities.
Integral1D integrate_1d_endpoint_singular(const std::function<double(double)>& f, double a, double b,
                                          double rel_tol = 1e-12);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + c_; }

 private:
  double sum_ = 0.0, c_ = 0.0;
};

}  // namespace conegeom

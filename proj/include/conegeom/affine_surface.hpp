#pragma once

#include <string>
#include <vector>

#include "conegeom/body.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

/// Exponent p ∈ R ∪ {±∞}. The infinite cases select the polar-volume formula
/// rather than a large finite p.
class Exponent {
 public:
  enum class Kind { finite, plus_infinity, minus_infinity };

  static Exponent finite(double p);
  static Exponent plus_infinity() { return Exponent(Kind::plus_infinity, 0.0); }
  static Exponent minus_infinity() { return Exponent(Kind::minus_infinity, 0.0); }
  /// ±inf map to the infinite variants.
  static Exponent from_double(double p);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// p for finite exponents, ±inf otherwise.
  double value() const;
  std::string to_string() const;

 private:
  Exponent(Kind k, double p) : kind_(k), p_(p) {}
  Kind kind_;
  double p_;
};

struct AspValue {
  Exponent p;
  double value;
  double error_estimate;
};

/// as_p(K) = ∫ f^{n/(n+p)} h^{-n(p-1)/(n+p)} dσ.
AspValue as_p(const ConvexBody& body, Exponent p, const QuadratureConfig& cfg = {});

/// Everything the p-sweeps need from one pass over the sphere.
struct AspSweep {
  std::vector<double> p;
  std::vector<double> value;          // as_p
  std::vector<double> log_over_polar; // log(as_p / as_∞)
  std::vector<double> log_over_volume;// log(as_p / as_0)
  double as_infinity = 0.0;           // ∫ h^{-n}
  double as_zero = 0.0;               // ∫ h f
  /// ⟨L⟩ under h f dσ, L = log(f h^{n+1}); the p → 0 limit of the third
  /// monotone quantity is exp(-mean_l_cone).
  double mean_l_cone = 0.0;
  double max_error = 0.0;
};

/// Finite p only (p may include 0). Ratios use expm1/log1p so that large p
/// keeps full relative accuracy in as_p/as_∞ - 1.
AspSweep as_p_sweep(const ConvexBody& body, const std::vector<double>& ps, const QuadratureConfig& cfg = {});

/// ∫ Π_i [h_i^{1-p} f_i]^{1/(n+p)} dσ.
AspValue as_p_mixed(const std::vector<BodyPtr>& bodies, double p, const QuadratureConfig& cfg = {});
/// ∫ Π_i h_i^{-1} dσ = n·Ṽ(K_1°, …, K_n°).
IntegralResult dual_mixed_volume(const std::vector<BodyPtr>& bodies, const QuadratureConfig& cfg = {});

/// log(as_p(K_1..K_n)/as_∞(K_1..K_n)) for each finite p, one pass.
std::vector<double> mixed_log_ratios(const std::vector<BodyPtr>& bodies, const std::vector<double>& ps,
                                     const QuadratureConfig& cfg = {});

/// The three quantities of the p-monotonicity statement, in log form:
/// (n+p)log(as_p/as_∞), (n+p)log(as_p/(n|K°|)), ((n+p)/p)log(as_p/(n|K|)).
struct MonotoneQuantities {
  std::vector<double> p;
  std::vector<double> over_as_infinity;
  std::vector<double> over_polar_volume;
  std::vector<double> over_volume;
};
MonotoneQuantities monotone_quantities(const ConvexBody& body, const std::vector<double>& ps,
                                       const QuadratureConfig& cfg = {});

void check_exponent(int n, double p);

}  // namespace conegeom

#pragma once

#include <string>
#include <vector>

namespace conegeom {

/// One basis function (log x)^log_power · x^power.
struct FitTerm {
  int log_power = 0;
  double power = 0.0;
};

struct FitModel {
  std::string name;
  std::vector<FitTerm> terms;  // terms[0] must be the constant

  /// a + b (log p)/p + c/p
  static FitModel log_over_p();
  /// a + b/log p
  static FitModel inverse_log();
  /// a + b/log p + c (log p)/p + d/p + e/(p log p)
  static FitModel centroid_first();
  /// a + b (log p)^2/p + c (log p)/p + d/p
  static FitModel centroid_second();
  /// a + b q log q + c q, for limits q -> 0
  static FitModel small_q();
  /// by name; "log_over_p", "inverse_log", ...
  static FitModel named(const std::string& name);
};

struct FitOptions {
  double rel_threshold = 1e-2;
  double abs_floor = 1e-8;
  bool throw_if_unreliable = true;
};

struct LimitFit {
  std::vector<double> grid;
  std::vector<double> samples;
  std::string model;
  std::vector<double> coefficients;
  double limit = 0.0;
  double fit_residual = 0.0;
  bool reliable = true;
};

/// Least-squares fit of samples against the model; limit is the constant term.
LimitFit fit_limit(const std::vector<double>& grid, const std::vector<double>& samples, const FitModel& model,
                   const FitOptions& opts = {});

}  // namespace conegeom

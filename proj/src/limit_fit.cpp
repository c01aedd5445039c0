#include "conegeom/limit_fit.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "conegeom/errors.hpp"

namespace conegeom {

FitModel FitModel::log_over_p() { return {"log_over_p", {{0, 0.0}, {1, -1.0}, {0, -1.0}}}; }

FitModel FitModel::inverse_log() { return {"inverse_log", {{0, 0.0}, {-1, 0.0}}}; }

FitModel FitModel::centroid_first() {
  return {"centroid_first", {{0, 0.0}, {-1, 0.0}, {1, -1.0}, {0, -1.0}, {-1, -1.0}}};
}

FitModel FitModel::centroid_second() { return {"centroid_second", {{0, 0.0}, {2, -1.0}, {1, -1.0}, {0, -1.0}}}; }

FitModel FitModel::small_q() { return {"small_q", {{0, 0.0}, {1, 1.0}, {0, 1.0}}}; }

FitModel FitModel::named(const std::string& name) {
  for (const FitModel& m : {log_over_p(), inverse_log(), centroid_first(), centroid_second(), small_q()})
    if (m.name == name) return m;
  fail(ErrorKind::InvalidConfig, "unknown fit model " + name);
}

LimitFit fit_limit(const std::vector<double>& grid, const std::vector<double>& samples, const FitModel& model,
                   const FitOptions& opts) {
  const std::size_t m = grid.size();
  const std::size_t k = model.terms.size();
  if (samples.size() != m) fail(ErrorKind::DimensionMismatch, "grid and samples differ in length");
  if (m < 4 || m < k) fail(ErrorKind::FitUnreliable, "need at least 4 samples and one per model term");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(grid[i] > 0.0)) fail(ErrorKind::DomainError, "grid values must be positive");
    if (!std::isfinite(samples[i])) fail(ErrorKind::FitUnreliable, "non-finite sample");
  }
  Eigen::MatrixXd a(m, k);
  Eigen::VectorXd b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double lg = std::log(grid[i]);
    for (std::size_t j = 0; j < k; ++j)
      a(i, j) = std::pow(lg, model.terms[j].log_power) * std::pow(grid[i], model.terms[j].power);
    b[i] = samples[i];
  }
  // column scaling keeps the QR well conditioned across p = 16 .. 16384
  Eigen::VectorXd scale = a.colwise().norm().transpose();
  for (std::size_t j = 0; j < k; ++j) a.col(j) /= scale[j];
  Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  for (std::size_t j = 0; j < k; ++j) x[j] /= scale[j];
  for (std::size_t j = 0; j < k; ++j) a.col(j) *= scale[j];

  LimitFit fit;
  fit.grid = grid;
  fit.samples = samples;
  fit.model = model.name;
  fit.coefficients.assign(x.data(), x.data() + k);
  fit.limit = x[0];
  fit.fit_residual = (a * x - b).cwiseAbs().maxCoeff();
  fit.reliable = std::isfinite(fit.limit) && fit.fit_residual <= opts.rel_threshold * std::abs(fit.limit) + opts.abs_floor;
  if (!fit.reliable && opts.throw_if_unreliable) {
    std::ostringstream msg;
    msg << "fit residual " << fit.fit_residual << " too large for limit " << fit.limit << " (model " << model.name << ")";
    fail(ErrorKind::FitUnreliable, msg.str());
  }
  return fit;
}

}  // namespace conegeom

#include "conegeom/config.hpp"

#include <cmath>
#include <limits>

#include "conegeom/bodies.hpp"
#include "conegeom/errors.hpp"

namespace conegeom {

namespace {

double number_or_inf(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity") return std::numeric_limits<double>::infinity();
    fail(ErrorKind::InvalidConfig, "expected a number or \"inf\", got \"" + s + "\"");
  }
  if (!j.is_number()) fail(ErrorKind::InvalidConfig, "expected a number");
  return j.get<double>();
}

int require_dim(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) fail(ErrorKind::InvalidConfig, "body needs an integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 2) fail(ErrorKind::InvalidConfig, "dimension must be at least 2");
  return n;
}

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::InvalidConfig, std::string("body is missing \"") + key + "\"");
  return j[key];
}

}  // namespace

Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidConfig, "matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  Mat M(rows, rows);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != rows)
      fail(ErrorKind::InvalidConfig, "matrix must be square");
    for (int k = 0; k < rows; ++k) M(i, k) = number_or_inf(j[i][k]);
  }
  return M;
}

BodyPtr body_from_json(const Json& j, const QuadratureConfig& cfg) {
  if (!j.is_object()) fail(ErrorKind::InvalidConfig, "body config must be a JSON object");
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "ball") return make_ball(require_dim(j), j.contains("radius") ? number_or_inf(j["radius"]) : 1.0);
  if (kind == "lp_ball") return make_lp_ball(require_dim(j), number_or_inf(require(j, "r")));
  if (kind == "cube") return make_cube(require_dim(j));
  if (kind == "cross_polytope") return make_cross_polytope(require_dim(j));
  if (kind == "ellipsoid") {
    if (j.contains("matrix")) return make_ellipsoid(matrix_from_json(j["matrix"]));
    if (j.contains("A")) return make_ellipsoid(matrix_from_json(j["A"]));
    const Json& axes = require(j, "axes");
    const int n = static_cast<int>(axes.size());
    if (n < 2) fail(ErrorKind::InvalidConfig, "ellipsoid needs at least two axes");
    Mat A = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) A(i, i) = number_or_inf(axes[i]);
    return make_ellipsoid(A);
  }
  if (kind == "linear_image") {
    const Json& T = j.contains("matrix") ? j["matrix"] : require(j, "T");
    return linear_image(body_from_json(require(j, "base"), cfg), matrix_from_json(T));
  }
  if (kind == "normalized") return normalized(body_from_json(require(j, "base"), cfg), cfg);
  if (kind == "polar")
    return polar_of(body_from_json(require(j, "base"), cfg), j.value("allow_numerical", false));
  fail(ErrorKind::InvalidConfig, "unknown body kind \"" + kind + "\"");
}

BodyPtr parse_body(const std::string& text, const QuadratureConfig& cfg) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidConfig, std::string("body JSON: ") + e.what());
  }
  return body_from_json(j, cfg);
}

QuadratureConfig quadrature_from_json(const Json& j, QuadratureConfig base) {
  if (j.contains("sphere_tol")) base.sphere_tol = j["sphere_tol"].get<double>();
  if (j.contains("max_nodes")) base.max_nodes = j["max_nodes"].get<std::size_t>();
  if (j.contains("mc_samples")) base.mc_samples = static_cast<std::uint64_t>(j["mc_samples"].get<double>());
  if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("threads")) base.threads = j["threads"].get<int>();
  if (!(base.sphere_tol > 0.0)) fail(ErrorKind::InvalidConfig, "sphere_tol must be positive");
  if (base.threads < 1) fail(ErrorKind::InvalidConfig, "threads must be at least 1");
  return base;
}

Json to_json(const QuadratureConfig& cfg) {
  return {{"sphere_tol", cfg.sphere_tol},
          {"max_nodes", cfg.max_nodes},
          {"mc_samples", cfg.mc_samples},
          {"seed", cfg.seed},
          {"threads", cfg.threads}};
}

Json to_json(const LimitFit& fit) {
  return {{"model", fit.model},         {"limit", fit.limit},       {"fit_residual", fit.fit_residual},
          {"reliable", fit.reliable},   {"grid", fit.grid},         {"samples", fit.samples},
          {"coefficients", fit.coefficients}};
}

}  // namespace conegeom

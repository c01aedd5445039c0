#pragma once

#include <string>

#include <json.hpp>

#include "conegeom/body.hpp"
#include "conegeom/limit_fit.hpp"
#include "conegeom/quadrature.hpp"

namespace conegeom {

using Json = nlohmann::json;

/// Bodies from JSON:
///   {"kind": "ball", "n": 2, "radius": 1}
///   {"kind": "lp_ball", "n": 2, "r": 3}            r may be "inf"
///   {"kind": "cube", "n": 2}, {"kind": "cross_polytope", "n": 2}
///   {"kind": "ellipsoid", "matrix": [[2, 0], [0, 0.5]]}  or "axes": [2, 0.5]
///   {"kind": "linear_image", "base": {...}, "matrix": [[...], ...]}
///   {"kind": "normalized", "base": {...}}
///   {"kind": "polar", "base": {...}, "allow_numerical": false}
BodyPtr body_from_json(const Json& j, const QuadratureConfig& cfg = {});
BodyPtr parse_body(const std::string& text, const QuadratureConfig& cfg = {});

/// Overrides the fields present in j: sphere_tol, max_nodes, mc_samples, seed, threads.
QuadratureConfig quadrature_from_json(const Json& j, QuadratureConfig base = {});
Json to_json(const QuadratureConfig& cfg);
Json to_json(const LimitFit& fit);

/// Reads an n x n matrix from nested arrays.
Mat matrix_from_json(const Json& j);

}  // namespace conegeom

// conegeom: batch runner for the Ω / affine-surface / centroid computations.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conegeom/affine_surface.hpp"
#include "conegeom/asymptotics.hpp"
#include "conegeom/bodies.hpp"
#include "conegeom/centroid.hpp"
#include "conegeom/config.hpp"
#include "conegeom/entropy.hpp"
#include "conegeom/errors.hpp"
#include "conegeom/experiments.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"

using namespace conegeom;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass;
};

struct Artifact {
  std::string text;
  std::string ext;  // "csv" or "json"
  std::vector<Check> checks;
};

struct Context {
  QuadratureConfig cfg;
  std::optional<std::uint64_t> mc;  // only when given on the command line or in the config
};

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Check at_most(std::string name, double value, double limit) {
  return {std::move(name), value, limit, std::isfinite(value) && value <= limit};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidConfig, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// a body given inline or as a path
Json body_json(const Json& spec) {
  if (spec.is_object()) return spec;
  if (!spec.is_string()) fail(ErrorKind::InvalidConfig, "\"body\" must be a JSON object, JSON text or a path");
  std::string s = spec.get<std::string>();
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) fail(ErrorKind::InvalidConfig, "empty body");
  if (s[first] != '{') s = read_file(s);
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidConfig, std::string("body JSON: ") + e.what());
  }
}

BodyPtr body_of(const Json& op, const Context& ctx) {
  if (!op.contains("body")) fail(ErrorKind::InvalidConfig, "operation needs a \"body\"");
  return body_from_json(body_json(op["body"]), ctx.cfg);
}

double parse_number(const std::string& s) {
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidConfig, "not a number: \"" + s + "\"");
  }
  if (used != s.size()) fail(ErrorKind::InvalidConfig, "not a number: \"" + s + "\"");
  return v;
}

// "1,2,4", "16:16384:geometric" (ratio 2 or given as 4th field), "0.1:1:linear:10"
std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() < 3) fail(ErrorKind::InvalidConfig, "grid needs start:stop:kind");
    const double a = parse_number(parts[0]), b = parse_number(parts[1]);
    std::vector<double> g;
    if (parts[2] == "geometric") {
      const double ratio = parts.size() > 3 ? parse_number(parts[3]) : 2.0;
      if (!(ratio > 1.0) || !(a > 0.0) || !(b >= a)) fail(ErrorKind::InvalidConfig, "bad geometric grid");
      for (double x = a; x <= b * (1 + 1e-12); x *= ratio) g.push_back(x);
    } else if (parts[2] == "linear") {
      const int count = parts.size() > 3 ? static_cast<int>(parse_number(parts[3])) : 10;
      if (count < 2) fail(ErrorKind::InvalidConfig, "linear grid needs at least two points");
      for (int i = 0; i < count; ++i) g.push_back(a + (b - a) * i / (count - 1));
    } else {
      fail(ErrorKind::InvalidConfig, "grid kind must be geometric or linear");
    }
    return g;
  }
  std::vector<double> g;
  std::stringstream ss(text);
  std::string p;
  while (std::getline(ss, p, ','))
    if (!p.empty()) g.push_back(parse_number(p));
  if (g.empty()) fail(ErrorKind::InvalidConfig, "empty grid");
  return g;
}

// grids may come as JSON arrays or as the CLI strings above
std::vector<double> grid_of(const Json& op, const char* key, std::vector<double> fallback) {
  if (!op.contains(key)) return fallback;
  const Json& g = op[key];
  if (g.is_string()) return parse_grid(g.get<std::string>());
  if (g.is_number()) return {g.get<double>()};
  if (!g.is_array()) fail(ErrorKind::InvalidConfig, std::string("\"") + key + "\" must be a list or grid string");
  std::vector<double> out;
  for (const auto& x : g) out.push_back(x.is_string() ? parse_number(x.get<std::string>()) : x.get<double>());
  return out;
}

std::vector<int> int_grid_of(const Json& op, const char* key, std::vector<int> fallback) {
  std::vector<int> out;
  for (double x : grid_of(op, key, std::vector<double>(fallback.begin(), fallback.end())))
    out.push_back(static_cast<int>(x));
  return out;
}

std::uint64_t mc_of(const Json& op, const Context& ctx, std::uint64_t fallback) {
  if (op.contains("mc")) return static_cast<std::uint64_t>(op["mc"].get<double>());
  return ctx.mc.value_or(fallback);
}

Json fit_json(const std::optional<LimitFit>& f) { return f ? to_json(*f) : Json(nullptr); }

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// ---- operations --------------------------------------------------------------

Artifact op_omega(const Json& op, const Context& ctx) {
  BodyPtr body = body_of(op, ctx);
  std::set<OmegaRoute> routes;
  std::vector<std::string> names{"entropy", "dual-entropy", "p-limit", "dual", "closed-form"};
  if (op.contains("routes")) {
    names.clear();
    if (op["routes"].is_string()) {
      std::stringstream ss(op["routes"].get<std::string>());
      std::string r;
      while (std::getline(ss, r, ',')) names.push_back(r);
    } else {
      for (const auto& r : op["routes"]) names.push_back(r.get<std::string>());
    }
  }
  for (const auto& n : names) {
    auto r = parse_omega_route(n);
    if (!r) fail(ErrorKind::InvalidConfig, "unknown route \"" + n + "\"");
    routes.insert(*r);
  }
  OmegaReport rep = omega_report(body, routes, ctx.cfg);
  Json j{{"body", rep.body},
         {"polytope", rep.polytope},
         {"entropy", opt(rep.via_entropy)},
         {"dual_entropy", opt(rep.via_entropy_dual)},
         {"p_limit", rep.via_p_limit ? Json(std::exp(rep.via_p_limit->limit)) : Json(nullptr)},
         {"dual_p_limit", rep.via_dual_p_limit ? Json(std::exp(rep.via_dual_p_limit->limit)) : Json(nullptr)},
         {"centroid", opt(rep.via_centroid)},
         {"closed_form", opt(rep.closed_form)},
         {"p_limit_fit", fit_json(rep.via_p_limit)},
         {"dual_p_limit_fit", fit_json(rep.via_dual_p_limit)},
         {"centroid_fit", fit_json(rep.via_centroid_asymptotics)},
         {"cross_route_max_rel_discrepancy", rep.cross_route_max_rel_discrepancy},
         {"entropy_route_discrepancy", rep.entropy_route_discrepancy},
         {"centroid_discrepancy", opt(rep.centroid_discrepancy)},
         {"notes", rep.notes}};
  Artifact a{j.dump(2) + "\n", "json", {}};
  if (!rep.polytope) {
    a.checks.push_back(at_most("omega cross-route discrepancy", rep.cross_route_max_rel_discrepancy, 1e-2));
    if (rep.via_entropy && rep.via_entropy_dual)
      a.checks.push_back(at_most("omega entropy-route discrepancy", rep.entropy_route_discrepancy, 1e-6));
    if (rep.closed_form && rep.via_entropy)
      a.checks.push_back(at_most("omega closed form vs entropy",
                                 std::abs(*rep.via_entropy - *rep.closed_form) / *rep.closed_form, 1e-6));
  }
  return a;
}

Artifact op_asp(const Json& op, const Context& ctx) {
  BodyPtr body = body_of(op, ctx);
  const int n = body->dim();
  std::ostringstream out;
  out << "p (dimensionless),as_p (length^(n(n-p)/(n+p)) with n=" << n << "),error (same units as as_p)\n";
  for (double p : grid_of(op, "p", {0.5, 1, 2, 4, 16, INFINITY})) {
    AspValue v = as_p(*body, Exponent::from_double(p), ctx.cfg);
    out << num(p) << "," << num(v.value) << "," << num(v.error_estimate) << "\n";
  }
  return {out.str(), "csv", {}};
}

Artifact op_zp(const Json& op, const Context& ctx) {
  BodyPtr body = normalized(body_of(op, ctx), ctx.cfg);
  const int n = body->dim();
  const int count = op.value("directions", 64);
  std::vector<UnitDirection> dirs;
  if (n == 2) {
    dirs = circle_directions(count);
  } else {
    for (int i = 0; i < n; ++i) {
      dirs.push_back(UnitDirection::axis(n, i));
      dirs.push_back(-UnitDirection::axis(n, i));
    }
  }
  std::ostringstream out;
  out << "p (dimensionless),h_min (length; volume-one body),h_max (length),polar_volume (length^-" << n
      << "),error (length^-" << n << ")\n";
  int violations = 0;
  std::vector<double> prev(dirs.size(), 0.0);
  for (double p : grid_of(op, "p_grid", grid_of(op, "p", parse_grid("16:16384:geometric")))) {
    double lo = INFINITY, hi = 0;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const double h = zp_support(*body, p, dirs[k], ctx.cfg);
      if (h > body->support(dirs[k].coords()) * (1 + 1e-12) || h < prev[k] * (1 - 1e-12)) ++violations;
      prev[k] = h;
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    IntegralResult pv = zp_polar_volume_integral(*body, p, ctx.cfg);
    out << num(p) << "," << num(lo) << "," << num(hi) << "," << num(pv.value) << "," << num(pv.error_estimate)
        << "\n";
  }
  return {out.str(), "csv", {at_most("Z_p nested in K and increasing in p (violations)", violations, 0)}};
}

Artifact op_theorem1(const Json& op, const Context& ctx) {
  BodyPtr body = normalized(body_of(op, ctx), ctx.cfg);
  const auto grid = grid_of(op, "p_grid", default_centroid_grid());
  FitOptions lenient;
  lenient.throw_if_unreliable = false;
  Theorem1First first = theorem1_first_limit(body, grid, ctx.cfg, lenient);
  Theorem1Second second = theorem1_second_limit(body, grid, ctx.cfg, lenient);
  const double e1 = std::abs(first.fit.limit - first.target) / std::abs(first.target);
  const double e2 = std::abs(second.fit.limit - second.rhs_integral) / std::abs(second.rhs_integral);
  const double forms = second.forms_residual / std::abs(second.rhs_omega_form);
  Json j{{"body", body->describe()},
         {"polar_volume", first.polar_volume},
         {"first", {{"target", first.target}, {"limit", first.fit.limit}, {"rel_error", e1}, {"fit", to_json(first.fit)}}},
         {"second",
          {{"rhs_integral", second.rhs_integral},
           {"rhs_omega_form", second.rhs_omega_form},
           {"forms_rel_residual", forms},
           {"limit", second.fit.limit},
           {"rel_error", e2},
           {"omega_from_fit", second.omega_from_fit},
           {"fit", to_json(second.fit)}}}};
  return {j.dump(2) + "\n",
          "json",
          {at_most("first limit relative error", e1, 2e-2), at_most("second limit relative error", e2, 5e-2),
           at_most("second-limit right-hand forms", forms, 1e-6)}};
}

Artifact op_floating(const Json& op, const Context& ctx) {
  BodyPtr body = normalized(body_of(op, ctx), ctx.cfg);
  if (body->dim() != 2) fail(ErrorKind::UnsupportedBody, "floating sweeps use circle directions (n = 2)");
  const auto deltas = grid_of(op, "delta_grid", grid_of(op, "delta", default_delta_grid()));
  SandwichResult s = sandwich_ratios(*body, deltas, circle_directions(op.value("directions", 64)), ctx.cfg);
  std::ostringstream out;
  out << "delta (volume fraction),p (dimensionless; log(1/delta)),ratio_min (dimensionless),ratio_max "
         "(dimensionless)\n";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const auto& r = s.ratios[i];
    out << num(deltas[i]) << "," << num(std::log(1 / deltas[i])) << "," << num(*std::min_element(r.begin(), r.end()))
        << "," << num(*std::max_element(r.begin(), r.end())) << "\n";
  }
  return {out.str(),
          "csv",
          {{"sandwich ratios within [0.2, 3]", s.min_ratio, 0.2, s.min_ratio >= 0.2 && s.max_ratio <= 3.0}}};
}

Artifact op_entropy(const Json& op, const Context& ctx) {
  BodyPtr body = body_of(op, ctx);
  EntropyReport r = entropy_report(body, op.value("caps", 8), mc_of(op, ctx, 0), ctx.cfg);
  Json caps = Json::array();
  for (const auto& c : r.pushforward.caps) {
    caps.push_back({{"axis", std::vector<double>(c.cap.axis.data(), c.cap.axis.data() + c.cap.axis.size())},
                    {"half_angle", c.cap.half_angle},
                    {"p_measure", c.p_measure},
                    {"polar_cone_measure", c.polar_measure},
                    {"residual", c.residual},
                    {"mc_frequency", opt(c.mc_frequency)},
                    {"mc_sigma", opt(c.mc_sigma)}});
  }
  Json j{{"body", r.body},
         {"kl_pq", r.kl_pq},
         {"kl_qp", r.kl_qp},
         {"omega", r.omega},
         {"omega_polar", opt(r.omega_polar)},
         {"identity_residuals",
          {{"kl_pq", r.eq1_residual},
           {"kl_qp", opt(r.eq2_residual)},
           {"omega_from_kl", r.corollary_residual},
           {"omega_from_kl_inverted_ratio", r.corollary_printed_residual}}},
         {"p_total", r.p_total},
         {"q_total", r.q_total},
         {"cap_table", caps},
         {"max_cap_residual", r.pushforward.max_residual},
         {"max_mc_z", opt(r.pushforward.max_mc_z)}};
  Artifact a{j.dump(2) + "\n", "json", {}};
  a.checks.push_back(at_most("KL(P||Q) identity", std::abs(r.eq1_residual), 1e-6));
  if (r.eq2_residual) a.checks.push_back(at_most("KL(Q||P) identity", std::abs(*r.eq2_residual), 1e-6));
  a.checks.push_back(at_most("omega from KL", r.corollary_residual, 1e-6));
  a.checks.push_back({"Gibbs inequality", std::min(r.kl_pq, r.kl_qp), -1e-12, std::min(r.kl_pq, r.kl_qp) >= -1e-12});
  a.checks.push_back(at_most("cone-measure pushforward residual", r.pushforward.max_residual, 1e-6));
  if (r.pushforward.max_mc_z) a.checks.push_back(at_most("Monte Carlo |z| (3 sigma)", *r.pushforward.max_mc_z, 3.0));
  return a;
}

Artifact op_appendix(const Json& op, const Context&) {
  const auto ns = int_grid_of(op, "n", {2, 3, 5});
  const auto as = grid_of(op, "a", {0.0, 0.5, 1.0});
  const LemmaConstant c = parse_lemma_constant(op.value("constant", std::string("corrected")));
  auto rows = appendix_table(ns, as, op.value("kmin", 8), op.value("kmax", 14), c);
  std::ostringstream out;
  out << "n (dimension),a (dimensionless),p (dimensionless),exact (dimensionless),expansion (dimensionless),"
         "residual (dimensionless),p2residual (dimensionless)\n";
  for (const auto& r : rows) {
    out << r.n << "," << num(r.a) << "," << num(r.p) << "," << r.exact.str(30) << "," << num(r.expansion) << ","
        << num(r.residual) << "," << num(r.p2_residual) << "\n";
  }
  const bool decays = p2_residual_decays(rows);
  StirlingResult s = stirling_terms(op.value("stirling_x", 10.0));
  return {out.str(),
          "csv",
          {{"p^2 residual decays", decays ? 1.0 : 0.0, 1.0, decays},
           at_most("three-term Stirling relative error", std::abs(s.rel_error), op.value("stirling_tol", 1e-7))}};
}

Artifact op_lpball_table(const Json& op, const Context& ctx) {
  std::ostringstream out;
  out << "n (dimension),r (exponent),omega_closed_form (length^(2n^2)),omega_entropy (length^(2n^2)),rel_error "
         "(dimensionless)\n";
  double worst = 0;
  for (int n : int_grid_of(op, "n", {2, 3}))
    for (double r : grid_of(op, "r", {1.5, 2, 3, 5})) {
      const double cf = omega_lp_closed_form(n, r);
      const double q = omega_entropy(*make_lp_ball(n, r), ctx.cfg);
      const double e = std::abs(q - cf) / cf;
      worst = std::max(worst, e);
      out << n << "," << num(r) << "," << num(cf) << "," << num(q) << "," << num(e) << "\n";
    }
  return {out.str(), "csv", {at_most("closed form vs quadrature", worst, 1e-6)}};
}

Artifact op_section5(const Json& op, const Context& ctx) {
  Json rows = Json::array();
  std::vector<Check> checks;
  for (int n : int_grid_of(op, "n", {3}))
    for (double r : grid_of(op, "r", {3})) {
      Section5Result s = section5_integral(n, r, mc_of(op, ctx, 10'000'000), op.value("seed", ctx.cfg.seed),
                                           ctx.cfg.threads);
      rows.push_back({{"n", n},
                      {"r", r},
                      {"samples", s.samples},
                      {"mc_value", s.mc_value},
                      {"std_error", s.std_error},
                      {"closed_form", s.closed_form},
                      {"printed_form", s.printed_form},
                      {"rel_error", s.rel_error},
                      {"z_score", s.z_score}});
      const std::string tag = "(n=" + std::to_string(n) + ", r=" + num(r) + ")";
      checks.push_back(at_most("section integral relative error " + tag, s.rel_error, 1e-2));
      checks.push_back(at_most("section integral |z| " + tag, std::abs(s.z_score), 3.0));
    }
  return {rows.dump(2) + "\n", "json", checks};
}

Artifact op_surface_rhs(const Json& op, const Context& ctx) {
  BodyPtr body = body_of(op, ctx);
  SurfaceRhs s = surface_body_rhs(*body, ctx.cfg);
  const double scale = std::max(1.0, std::abs(s.omega_form));
  Json j{{"body", body->describe()},
         {"boundary_integral", s.boundary_integral},
         {"omega_form", s.omega_form},
         {"residual", s.residual}};
  return {j.dump(2) + "\n", "json", {at_most("boundary integral vs omega form", std::abs(s.residual) / scale, 1e-6)}};
}

Artifact run_op(const std::string& name, const Json& op, const Context& ctx) {
  if (name == "omega") return op_omega(op, ctx);
  if (name == "asp") return op_asp(op, ctx);
  if (name == "zp") return op_zp(op, ctx);
  if (name == "theorem1") return op_theorem1(op, ctx);
  if (name == "floating") return op_floating(op, ctx);
  if (name == "entropy") return op_entropy(op, ctx);
  if (name == "appendix") return op_appendix(op, ctx);
  if (name == "lpball-table") return op_lpball_table(op, ctx);
  if (name == "section5") return op_section5(op, ctx);
  if (name == "surface-rhs") return op_surface_rhs(op, ctx);
  fail(ErrorKind::InvalidConfig, "unknown operation \"" + name + "\"");
}

// ---- reporting -----------------------------------------------------------------

enum Status { ok = 0, budget = 2, check_failed = 3 };

void print_checks(std::ostream& os, const std::string& label, const std::vector<Check>& checks) {
  for (const auto& c : checks)
    os << (c.pass ? "PASS " : "FAIL ") << label << ": " << c.name << " = " << num(c.value) << " (limit " << num(c.limit)
       << ")\n";
}

int status_of(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return check_failed;
  return ok;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidConfig, "cannot write " + path);
  f << text;
}

void error_report(const GeometryError& e) {
  Json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  std::cerr << j.dump() << "\n";
}

int exit_code_for(const GeometryError& e) {
  if (e.is_budget_failure()) return budget;
  if (e.kind() == ErrorKind::InvalidConfig) return 1;
  return check_failed;
}

struct BatchEntry {
  std::string name;
  Json op;
  std::string file;
};

// runs every entry, writes artifacts under dir, prints one summary line per check
int run_batch(const std::vector<BatchEntry>& entries, const Context& ctx, const std::string& dir) {
  bool any_budget = false, any_failed = false;
  std::size_t failed = 0, total = 0;
  for (const auto& e : entries) {
    try {
      Artifact a = run_op(e.name, e.op, ctx);
      const std::string file = e.file.empty() ? e.name + "." + a.ext : e.file;
      write_text((fs::path(dir) / file).string(), a.text);
      print_checks(std::cout, e.name, a.checks);
      for (const auto& c : a.checks) {
        ++total;
        if (!c.pass) ++failed;
      }
      any_failed = any_failed || status_of(a.checks) != ok;
    } catch (const GeometryError& err) {
      std::cout << "ERROR " << e.name << ": " << err.what() << "\n";
      error_report(err);
      ++total;
      ++failed;
      (err.is_budget_failure() ? any_budget : any_failed) = true;
    }
    std::cout.flush();
  }
  std::cout << "summary: " << (total - failed) << "/" << total << " checks passed\n";
  // a budget failure wins: the numbers behind any failed identity are not trustworthy then
  if (any_budget) return budget;
  return any_failed ? check_failed : ok;
}

std::vector<BatchEntry> default_suite(const Context& ctx) {
  const Json disc{{"kind", "normalized"}, {"base", {{"kind", "ball"}, {"n", 2}}}};
  const Json l3{{"kind", "lp_ball"}, {"n", 2}, {"r", 3}};
  std::vector<BatchEntry> s{
      {"omega", {{"body", l3}}, ""},
      {"asp", {{"body", l3}}, ""},
      {"zp", {{"body", disc}, {"p_grid", "16:16384:geometric"}}, ""},
      {"theorem1", {{"body", disc}}, ""},
      {"floating", {{"body", disc}}, ""},
      {"entropy", {{"body", l3}, {"caps", 8}, {"mc", double(ctx.mc.value_or(1'000'000))}}, ""},
      {"appendix", Json::object(), ""},
      {"lpball-table", Json::object(), ""},
      {"section5", {{"n", {2, 3}}, {"r", {3}}}, ""},
      {"surface-rhs", {{"body", disc}}, ""},
  };
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conegeom: affine invariants of convex bodies from cone measures and centroid bodies"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-10;
  std::string mc_text;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out;
  app.add_option("--tol", tol, "relative tolerance of the sphere rules");
  app.add_option("--mc", mc_text, "Monte Carlo sample count (1e6 style accepted)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--threads", threads, "worker threads (CONEGEOM_THREADS overrides)");
  app.add_option("--out", out, "output file (directory for all/run); stdout when absent");

  // per-subcommand options, gathered into a JSON operation
  Json op = Json::object();
  std::string body, routes, p_list, p_grid, delta_grid, n_list, a_list, r_list, constant, config_path;
  int caps = 8, directions = 64, kmin = 8, kmax = 14;

  auto add_body = [&](CLI::App* sub) { sub->add_option("--body", body, "body as JSON text or a path")->required(); };

  auto* omega = app.add_subcommand("omega", "Omega by every available route");
  add_body(omega);
  omega->add_option("--routes", routes, "entropy,dual-entropy,p-limit,dual,closed-form,centroid");
  auto* asp = app.add_subcommand("asp", "L_p affine surface areas");
  add_body(asp);
  asp->add_option("--p", p_list, "exponents, e.g. 0.5,1,2,inf");
  auto* zp = app.add_subcommand("zp", "centroid bodies Z_p of the volume-one rescaling");
  add_body(zp);
  zp->add_option("--p-grid", p_grid, "grid, e.g. 16:16384:geometric");
  zp->add_option("--directions", directions, "directions (n = 2)");
  auto* th1 = app.add_subcommand("theorem1", "both centroid-body limits with extrapolation");
  add_body(th1);
  th1->add_option("--p-grid", p_grid, "grid of p");
  auto* floating = app.add_subcommand("floating", "floating body against Z_log(1/delta)");
  add_body(floating);
  floating->add_option("--delta-grid", delta_grid, "deltas, e.g. 1e-4,1e-3,0.01");
  floating->add_option("--directions", directions, "directions on the circle");
  auto* entropy = app.add_subcommand("entropy", "KL divergences and the cone-measure pushforward");
  add_body(entropy);
  entropy->add_option("--caps", caps, "number of caps");
  auto* appendix = app.add_subcommand("appendix", "beta-function expansion table");
  appendix->add_option("--n", n_list, "dimensions, e.g. 2,3,5");
  appendix->add_option("--a", a_list, "weights, e.g. 0,0.5,1");
  appendix->add_option("--kmin", kmin, "smallest k in p = 2^k");
  appendix->add_option("--kmax", kmax, "largest k in p = 2^k");
  appendix->add_option("--constant", constant, "corrected or printed");
  auto* lp = app.add_subcommand("lpball-table", "closed-form Omega of l_r balls against quadrature");
  lp->add_option("--n", n_list, "dimensions");
  lp->add_option("--r", r_list, "exponents r > 1");
  auto* s5 = app.add_subcommand("section5", "Monte Carlo integral against its digamma closed form");
  s5->add_option("--n", n_list, "dimensions");
  s5->add_option("--r", r_list, "exponents r > 1");
  auto* surf = app.add_subcommand("surface-rhs", "boundary integral against |K°| log(1/Omega)");
  add_body(surf);
  auto* all = app.add_subcommand("all", "the default suite, artifacts written to --out (default conegeom_out)");
  auto* run = app.add_subcommand("run", "operations listed in a JSON config");
  run->add_option("--config", config_path, "config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Context ctx;
  try {
    ctx.cfg.sphere_tol = tol;
    ctx.cfg.seed = seed;
    ctx.cfg.threads = threads;
    if (!mc_text.empty()) {
      const double m = parse_number(mc_text);
      if (!(m >= 1.0)) fail(ErrorKind::InvalidConfig, "--mc must be at least 1");
      ctx.mc = static_cast<std::uint64_t>(m);
      ctx.cfg.mc_samples = *ctx.mc;
    }
    if (const char* env = std::getenv("CONEGEOM_THREADS")) {
      const int t = std::atoi(env);
      if (t < 1) fail(ErrorKind::InvalidConfig, "CONEGEOM_THREADS must be a positive integer");
      ctx.cfg.threads = t;
    }
    if (ctx.cfg.threads < 1) fail(ErrorKind::InvalidConfig, "--threads must be at least 1");

    if (all->parsed()) return run_batch(default_suite(ctx), ctx, out.empty() ? "conegeom_out" : out);

    if (run->parsed()) {
      Json cfg;
      try {
        cfg = Json::parse(read_file(config_path));
      } catch (const Json::exception& e) {
        fail(ErrorKind::InvalidConfig, std::string("config: ") + e.what());
      }
      if (cfg.contains("quadrature")) ctx.cfg = quadrature_from_json(cfg["quadrature"], ctx.cfg);
      if (cfg.contains("mc")) ctx.mc = static_cast<std::uint64_t>(cfg["mc"].get<double>());
      if (const char* env = std::getenv("CONEGEOM_THREADS")) ctx.cfg.threads = std::max(1, std::atoi(env));
      std::vector<BatchEntry> entries;
      if (!cfg.contains("operations") || !cfg["operations"].is_array())
        fail(ErrorKind::InvalidConfig, "config needs an \"operations\" array");
      for (const auto& e : cfg["operations"]) {
        if (!e.contains("op")) fail(ErrorKind::InvalidConfig, "every operation needs \"op\"");
        entries.push_back({e["op"].get<std::string>(), e, e.value("out", std::string())});
      }
      const std::string dir = !out.empty() ? out : cfg.value("out_dir", std::string("conegeom_out"));
      return run_batch(entries, ctx, dir);
    }

    std::string name;
    for (auto* sub : app.get_subcommands()) name = sub->get_name();
    if (!body.empty()) op["body"] = body;
    if (!routes.empty()) op["routes"] = routes;
    if (!p_list.empty()) op["p"] = p_list;
    if (!p_grid.empty()) op["p_grid"] = p_grid;
    if (!delta_grid.empty()) op["delta_grid"] = delta_grid;
    if (!n_list.empty()) op["n"] = n_list;
    if (!a_list.empty()) op["a"] = a_list;
    if (!r_list.empty()) op["r"] = r_list;
    if (!constant.empty()) op["constant"] = constant;
    op["caps"] = caps;
    op["directions"] = directions;
    op["kmin"] = kmin;
    op["kmax"] = kmax;

    Artifact a = run_op(name, op, ctx);
    write_text(out, a.text);
    print_checks(std::cerr, name, a.checks);
    return status_of(a.checks);
  } catch (const GeometryError& e) {
    error_report(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

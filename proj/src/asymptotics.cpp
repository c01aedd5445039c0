#include "conegeom/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "conegeom/errors.hpp"

namespace conegeom {

using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::log1p;
using boost::multiprecision::pow;

namespace {

HighPrecision hp(double x) { return HighPrecision(x); }

ExpansionResult make_result(int n, double a, double p, const HighPrecision& exact, const HighPrecision& expansion) {
  ExpansionResult r;
  r.n = n;
  r.a = a;
  r.p = p;
  r.exact = exact;
  r.expansion = static_cast<double>(expansion);
  const HighPrecision res = exact - expansion;
  r.residual = static_cast<double>(res);
  r.p2_residual = static_cast<double>(res * hp(p) * hp(p));
  return r;
}

}  // namespace

HighPrecision beta_power_exact(int n, double p) {
  const HighPrecision pp = hp(p), y = HighPrecision(n + 1) / 2;
  const HighPrecision lb = boost::math::lgamma(pp + 1) + boost::math::lgamma(y) - boost::math::lgamma(pp + 1 + y);
  return exp(HighPrecision(n) / pp * lb);
}

HighPrecision beta_power_expansion_hp(int n, double p, double a, LemmaConstant c, bool second_order) {
  const HighPrecision pp = hp(p), N = HighPrecision(n);
  const HighPrecision L = log(pp);
  const HighPrecision g = boost::math::lgamma(HighPrecision(n + 1) / 2);
  HighPrecision e = 1 - N * (N + 1) / (2 * pp) * L + N / pp * g;
  if (!second_order) return e;
  const HighPrecision C = c == LemmaConstant::corrected ? (N + 1) * (N + 3) / 4 : (N + 1) * (N * N + 3 * N + 6) / 4;
  e += N * N * (N + 1) * (N + 1) / (8 * pp * pp) * L * L;
  e -= N * N * (N + 1) / (2 * pp * pp) * g * L;
  e += N / (2 * pp * pp) * (N * g * g - C - (N + 1) * (N - 1) / 2 * hp(a));
  return e;
}

ExpansionResult beta_power_expansion(int n, double p, LemmaConstant c) {
  return make_result(n, 0.0, p, beta_power_exact(n, p), beta_power_expansion_hp(n, p, 0.0, c));
}

HighPrecision weighted_beta_exact(int n, double p, double a) {
  if (a == 0.0) return beta_power_exact(n, p);
  // s = 1 - u keeps the mass, concentrated at s ~ 1/p, next to an endpoint
  const HighPrecision pp = hp(p), half = HighPrecision(n - 1) / 2, A = hp(a);
  auto f = [&](const HighPrecision& s) -> HighPrecision {
    if (s <= 0 || s >= 1) return HighPrecision(0);
    const HighPrecision w = 1 - A * s;
    if (w <= 0) return HighPrecision(0);
    return exp(pp * log1p(-s) + half * (log(s) + log(w)));
  };
  boost::math::quadrature::tanh_sinh<HighPrecision> ts(15);
  const HighPrecision split = std::min(HighPrecision(64) / pp, HighPrecision(0.5));
  const HighPrecision tol = HighPrecision("1e-35");
  HighPrecision integral = ts.integrate(f, HighPrecision(0), split, tol);
  integral += ts.integrate(f, split, HighPrecision(1), tol);
  return exp(HighPrecision(n) / pp * log(integral));
}

ExpansionResult weighted_beta_expansion(int n, double p, double a, LemmaConstant c) {
  if (a < 0.0 || a > 1.0) fail(ErrorKind::OutOfRange, "a must lie in [0, 1]");
  return make_result(n, a, p, weighted_beta_exact(n, p, a), beta_power_expansion_hp(n, p, a, c));
}

StirlingResult stirling_terms(double x) {
  const HighPrecision X = hp(x);
  const HighPrecision pref = sqrt(2 * boost::math::constants::pi<HighPrecision>()) * pow(X, X - HighPrecision(0.5)) * exp(-X);
  const HighPrecision approx = pref * (1 + 1 / (12 * X) + 1 / (288 * X * X));
  const HighPrecision exact = boost::math::tgamma(X);
  return {x, static_cast<double>(approx), static_cast<double>(exact), static_cast<double>(abs(approx - exact) / exact)};
}

std::vector<ExpansionResult> appendix_table(const std::vector<int>& ns, const std::vector<double>& as, int kmin,
                                            int kmax, LemmaConstant c) {
  std::vector<ExpansionResult> rows;
  for (int n : ns)
    for (double a : as)
      for (int k = kmin; k <= kmax; ++k) rows.push_back(weighted_beta_expansion(n, std::ldexp(1.0, k), a, c));
  return rows;
}

bool p2_residual_decays(const std::vector<ExpansionResult>& rows) {
  std::map<std::pair<int, double>, std::vector<std::pair<double, double>>> runs;
  for (const auto& r : rows) runs[{r.n, r.a}].push_back({r.p, std::abs(r.p2_residual)});
  for (auto& [key, run] : runs) {
    std::sort(run.begin(), run.end());
    for (std::size_t i = 1; i < run.size(); ++i)
      if (run[i].second > run[i - 1].second) return false;
  }
  return true;
}

std::string to_string(LemmaConstant c) { return c == LemmaConstant::corrected ? "corrected" : "printed"; }

LemmaConstant parse_lemma_constant(const std::string& name) {
  if (name == "corrected") return LemmaConstant::corrected;
  if (name == "printed") return LemmaConstant::printed;
  fail(ErrorKind::InvalidConfig, "lemma constant must be 'corrected' or 'printed'");
}

}  // namespace conegeom

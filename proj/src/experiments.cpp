#include "conegeom/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "conegeom/errors.hpp"
#include "conegeom/geometry.hpp"
#include "conegeom/omega.hpp"
#include "conegeom/rng.hpp"
#include "conegeom/special.hpp"

namespace conegeom {

namespace {

double dirichlet_prefactor(int n, double r) {
  const double a = (r - 1.0) / r;
  return std::exp((1 - n) * std::log(r) + n * std::lgamma(a) - std::lgamma(n * a));
}

}  // namespace

double section5_closed_form(int n, double r) {
  const double a = (r - 1.0) / r;
  return dirichlet_prefactor(n, r) *
         (n * (r - 2.0) / r * (digamma(a) - digamma(n * a)) + (n - 1) * std::log(r - 1.0));
}

double section5_printed_form(int n, double r) {
  const double a = (r - 1.0) / r;
  return n * dirichlet_prefactor(n, r) * (n * (r - 2.0) / r * (digamma(a) - digamma(n * a)) + (n - 1) * std::log(r));
}

Section5Result section5_integral(int n, double r, std::uint64_t samples, std::uint64_t seed, int threads) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "section 5 integral needs n >= 2");
  if (!(r > 1.0) || !std::isfinite(r)) fail(ErrorKind::DomainError, "section 5 integral needs 1 < r < inf");
  if (samples < 2) fail(ErrorKind::BudgetExceeded, "need at least two samples");
  const double a = (r - 1.0) / r;
  const double c0 = (n - 1) * std::log(r - 1.0), c1 = (r - 2.0) / r;
  // blocks of fixed size so the draws do not depend on the thread count
  const std::uint64_t block = 1 << 16;
  const std::uint64_t nblocks = (samples + block - 1) / block;
  std::vector<double> mean(nblocks), m2(nblocks);
  auto run_block = [&](std::uint64_t b) {
    CounterRng rng(seed, b);
    std::gamma_distribution<double> gamma(a, 1.0);
    const std::uint64_t lo = b * block, hi = std::min(samples, lo + block);
    double mu = 0.0, s2 = 0.0;
    std::vector<double> g(n);
    for (std::uint64_t k = lo; k < hi; ++k) {
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        g[i] = gamma(rng);
        total += g[i];
      }
      double logs = 0.0;
      for (int i = 0; i < n; ++i) logs += std::log(g[i] / total);
      const double v = c0 + c1 * logs;
      const double d = v - mu;
      mu += d / static_cast<double>(k - lo + 1);
      s2 += d * (v - mu);
    }
    mean[b] = mu;
    m2[b] = s2;
  };
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b; (b = next.fetch_add(1)) < nblocks;) run_block(b);
  };
  const int nthreads = static_cast<int>(std::clamp<std::uint64_t>(threads, 1, nblocks));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // Chan's merge, in block order
  double mu = 0.0, s2 = 0.0, cnt = 0.0;
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    const double nb = static_cast<double>(std::min(samples, (b + 1) * block) - b * block);
    const double d = mean[b] - mu;
    const double tot = cnt + nb;
    mu += d * nb / tot;
    s2 += m2[b] + d * d * cnt * nb / tot;
    cnt = tot;
  }
  const double pref = dirichlet_prefactor(n, r);
  Section5Result out;
  out.n = n;
  out.r = r;
  out.samples = samples;
  out.mc_value = pref * mu;
  out.std_error = pref * std::sqrt(s2 / (cnt - 1.0) / cnt);
  out.closed_form = section5_closed_form(n, r);
  out.printed_form = section5_printed_form(n, r);
  out.rel_error = std::abs(out.mc_value - out.closed_form) / std::abs(out.closed_form);
  out.z_score = out.std_error > 0.0 ? (out.mc_value - out.closed_form) / out.std_error : 0.0;
  return out;
}

SurfaceRhs surface_body_rhs(const ConvexBody& body, const QuadratureConfig& cfg) {
  if (body.smoothness() != Smoothness::c2_plus) fail(ErrorKind::NonSmoothBody, body.describe() + " is not C2_plus");
  const int n = body.dim();
  // boundary integral in radial coordinates: dμ = ρ^n/⟨x,N⟩ dσ
  const auto r = integrate_radial(
      body, 1,
      [&](const RadialSample& s, double* out) {
        const Vec x = s.radial * s.u;
        const Vec N = body.boundary_normal(x);
        const double hx = x.dot(N);
        const double lk = -body.log_curvature(N);
        if (!std::isfinite(lk) && lk < 0) {
          out[0] = 0.0;  // κ log κ -> 0 where the curvature vanishes
          return;
        }
        out[0] = std::pow(s.radial, n) / hx * std::exp(lk - n * std::log(hx)) * (lk - (n + 1) * std::log(hx));
      },
      cfg);
  SurfaceRhs out;
  out.boundary_integral = r[0].value;
  out.omega_form = -polar_volume(body, cfg).value * std::log(omega_entropy(body, cfg));
  out.residual = std::abs(out.boundary_integral - out.omega_form);
  return out;
}

}  // namespace conegeom

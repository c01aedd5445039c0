#include "conegeom/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>
#include <thread>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "conegeom/errors.hpp"
#include "conegeom/rng.hpp"

namespace conegeom {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
// beyond this the node sits within ~1e-64 of an endpoint; weights there are
// negligible even against the |u_i|^{-3/4} singularities of ℓ_r curvature
constexpr double kTanhSinhSpan = 4.5;
constexpr std::size_t kChunk = 2048;

double sphere_surface(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

unsigned nth_prime(int k) {
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                    59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  if (k >= static_cast<int>(std::size(primes))) fail(ErrorKind::DimensionMismatch, "QMC rule supports n <= 30");
  return primes[k];
}

void pairwise_reduce(std::vector<double>& chunks, std::size_t count, int m, double* out) {
  // bottom-up tree over chunk partial sums
  std::size_t width = 1;
  while (width < count) {
    for (std::size_t i = 0; i + width < count; i += 2 * width)
      for (int k = 0; k < m; ++k) chunks[i * m + k] += chunks[(i + width) * m + k];
    width *= 2;
  }
  for (int k = 0; k < m; ++k) out[k] = count ? chunks[k] : 0.0;
}

}  // namespace

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    c_ += (sum_ - t) + x;
  else
    c_ += (x - t) + sum_;
  sum_ = t;
}

AngleRule AngleRule::tanh_sinh(int level) {
  AngleRule rule;
  const double h = std::ldexp(1.0, -level);
  const int kmax = static_cast<int>(std::ceil(kTanhSinhSpan / h));
  for (int k = -kmax; k <= kmax; ++k) {
    const double t = k * h;
    const double q = 0.5 * std::numbers::pi * std::sinh(std::abs(t));
    const double e = std::exp(-2.0 * q);
    // for t >= 0: 1 - x = 2e/(1+e), 1 + x = 2/(1+e)
    const double small = kQuarterPi * 2.0 * e / (1.0 + e);
    const double large = kQuarterPi * 2.0 / (1.0 + e);
    const double theta = t >= 0 ? large : small;
    const double comp = t >= 0 ? small : large;
    const double w = h * kQuarterPi * 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    if (!(w > 0.0) || comp <= 0.0 || theta <= 0.0) continue;
    rule.sin_theta.push_back(theta < kQuarterPi ? std::sin(theta) : std::cos(comp));
    rule.cos_theta.push_back(theta < kQuarterPi ? std::cos(theta) : std::sin(comp));
    rule.weight.push_back(w);
  }
  return rule;
}

AngleRule AngleRule::gauss_legendre(int points) {
  AngleRule rule;
  const int m = points;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const double theta = kQuarterPi * (1.0 + x), comp = kQuarterPi * (1.0 - x);
    rule.sin_theta.push_back(theta < kQuarterPi ? std::sin(theta) : std::cos(comp));
    rule.cos_theta.push_back(theta < kQuarterPi ? std::cos(theta) : std::sin(comp));
    rule.weight.push_back(kQuarterPi * w);
  }
  return rule;
}

SphereRule SphereRule::product_tanh_sinh(int n, int level) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "sphere rules need n >= 2");
  SphereRule r;
  r.n_ = n;
  r.kind_ = RuleKind::product_tanh_sinh;
  r.level_ = level;
  r.angles_ = AngleRule::tanh_sinh(level);
  std::size_t per = 1;
  for (int k = 0; k < n - 1; ++k) per *= r.angles_.size();
  r.per_orthant_ = per;
  r.size_ = per << n;
  return r;
}

SphereRule SphereRule::product_gauss(int n, int level) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "sphere rules need n >= 2");
  SphereRule r;
  r.n_ = n;
  r.kind_ = RuleKind::product_gauss;
  r.level_ = level;
  r.angles_ = AngleRule::gauss_legendre(4 << level);
  std::size_t per = 1;
  for (int k = 0; k < n - 1; ++k) per *= r.angles_.size();
  r.per_orthant_ = per;
  r.size_ = per << n;
  return r;
}

SphereRule SphereRule::quasi_monte_carlo(int n, int level, std::uint64_t seed) {
  if (n < 2) fail(ErrorKind::DimensionMismatch, "sphere rules need n >= 2");
  SphereRule r;
  r.n_ = n;
  r.kind_ = RuleKind::quasi_monte_carlo;
  r.level_ = level;
  r.size_ = std::size_t{1024} << level;
  CounterRng rng(seed, 0x5348494654ULL);
  for (int d = 0; d < n; ++d) r.shift_.push_back(rng.uniform());
  r.qmc_weight_ = sphere_surface(n) / static_cast<double>(r.size_);
  return r;
}

SphereRule SphereRule::for_dimension(int n, int level, std::uint64_t seed) {
  if (n <= 3) return product_tanh_sinh(n, level);
  if (n == 4) return product_gauss(n, level);
  return quasi_monte_carlo(n, level, seed);
}

int SphereRule::first_level(int n) {
  if (n <= 3) return 2;
  return 1;
}

int SphereRule::last_level(int n) {
  if (n == 2) return 12;
  if (n == 3) return 6;
  if (n == 4) return 4;
  return 12;
}

void SphereRule::node(std::size_t i, Vec& u, double& w) const {
  u.resize(n_);
  if (kind_ == RuleKind::quasi_monte_carlo) {
    static const boost::math::normal_distribution<double> normal;
    for (int d = 0; d < n_; ++d) {
      double x = radical_inverse(i + 1, nth_prime(d)) + shift_[d];
      x -= std::floor(x);
      x = std::clamp(x, 1e-300, 1.0 - 1e-16);
      u[d] = boost::math::quantile(normal, x);
    }
    u /= u.norm();
    w = qmc_weight_;
    return;
  }
  const std::size_t orthant = i / per_orthant_;
  std::size_t j = i % per_orthant_;
  const std::size_t m = angles_.size();
  double prefix = 1.0;  // product of sines so far
  w = 1.0;
  for (int k = 0; k < n_ - 1; ++k) {
    const std::size_t a = j % m;
    j /= m;
    u[k] = prefix * angles_.cos_theta[a];
    // Jacobian carries sin^{n-2-k} of angle k
    w *= angles_.weight[a] * std::pow(angles_.sin_theta[a], n_ - 2 - k);
    prefix *= angles_.sin_theta[a];
  }
  u[n_ - 1] = prefix;
  for (int d = 0; d < n_; ++d)
    if (orthant >> d & 1U) u[d] = -u[d];
}

std::vector<Vec> SphereRule::nodes() const {
  std::vector<Vec> out(size_);
  double w;
  for (std::size_t i = 0; i < size_; ++i) node(i, out[i], w);
  return out;
}

std::vector<double> SphereRule::weights() const {
  std::vector<double> out(size_);
  Vec u;
  for (std::size_t i = 0; i < size_; ++i) node(i, u, out[i]);
  return out;
}

std::vector<double> apply_rule(const SphereRule& rule, int m, const MultiIntegrand& f, int threads) {
  const std::size_t total = rule.size();
  const std::size_t nchunks = (total + kChunk - 1) / kChunk;
  std::vector<double> chunk_sums(nchunks * m, 0.0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    Vec u;
    double w;
    std::vector<double> vals(m);
    std::vector<CompensatedSum> acc(m);
    while (true) {
      const std::size_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      {
        std::lock_guard lock(error_mutex);
        if (error) return;
      }
      try {
        std::fill(acc.begin(), acc.end(), CompensatedSum{});
        const std::size_t end = std::min(total, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
          rule.node(i, u, w);
          if (!(w > 1e-290)) continue;
          f(u, vals.data());
          for (int k = 0; k < m; ++k) {
            if (!std::isfinite(vals[k])) {
              std::ostringstream msg;
              msg << "integrand component " << k << " is " << vals[k] << " at node (";
              for (int d = 0; d < u.size(); ++d) msg << (d ? ", " : "") << u[d];
              msg << ")";
              fail(ErrorKind::NonFiniteIntegrand, msg.str());
            }
            acc[k].add(w * vals[k]);
          }
        }
        for (int k = 0; k < m; ++k) chunk_sums[c * m + k] = acc[k].value();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(nchunks)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<double> out(m);
  pairwise_reduce(chunk_sums, nchunks, m, out.data());
  return out;
}

std::vector<IntegralResult> integrate_sphere_multi(int n, int m, const MultiIntegrand& f,
                                                   const QuadratureConfig& cfg) {
  std::vector<double> prev;
  std::size_t used = 0;
  for (int level = SphereRule::first_level(n); level <= SphereRule::last_level(n); ++level) {
    SphereRule rule = SphereRule::for_dimension(n, level, cfg.seed);
    if (rule.size() > cfg.max_nodes) break;
    std::vector<double> cur = apply_rule(rule, m, f, cfg.threads);
    used += rule.size();
    if (!prev.empty()) {
      bool ok = true;
      std::vector<IntegralResult> out(m);
      for (int k = 0; k < m; ++k) {
        const double err = std::abs(cur[k] - prev[k]);
        out[k] = {cur[k], err, used};
        if (err > cfg.sphere_tol * std::max(1.0, std::abs(cur[k]))) ok = false;
      }
      if (ok) return out;
    }
    prev = std::move(cur);
  }
  std::ostringstream msg;
  msg << "sphere rule in dimension " << n << " did not reach tolerance " << cfg.sphere_tol << " within "
      << cfg.max_nodes << " nodes";
  fail(ErrorKind::QuadratureBudgetExceeded, msg.str());
}

IntegralResult integrate_sphere(int n, const ScalarIntegrand& f, const QuadratureConfig& cfg) {
  return integrate_sphere_multi(n, 1, [&](const Vec& u, double* out) { out[0] = f(u); }, cfg)[0];
}

IntegralResult integrate_sphere(const ScalarIntegrand& f, const SphereRule& rule, int threads) {
  MultiIntegrand g = [&](const Vec& u, double* out) { out[0] = f(u); };
  const double fine = apply_rule(rule, 1, g, threads)[0];
  double err = 0.0;
  std::size_t used = rule.size();
  if (rule.level() > 0 && rule.kind() != RuleKind::quasi_monte_carlo) {
    SphereRule coarse = rule.kind() == RuleKind::product_gauss ? SphereRule::product_gauss(rule.dim(), rule.level() - 1)
                                                              : SphereRule::product_tanh_sinh(rule.dim(), rule.level() - 1);
    err = std::abs(fine - apply_rule(coarse, 1, g, threads)[0]);
    used += coarse.size();
  } else if (rule.kind() == RuleKind::quasi_monte_carlo && rule.level() > 0) {
    // the first half of the sequence is itself a rule of the previous level
    const std::size_t half = rule.size() / 2;
    CompensatedSum s;
    Vec u;
    double w;
    for (std::size_t i = 0; i < half; ++i) {
      rule.node(i, u, w);
      s.add(2.0 * w * f(u));
    }
    err = std::abs(fine - s.value());
  }
  return {fine, err, used};
}

Integral1D integrate_1d(const std::function<double(double)>& f, double a, double b, double rel_tol, double abs_tol) {
  return integrate_1d(f, std::vector<double>{a, b}, rel_tol, abs_tol);
}

// Globally adaptive Gauss–Kronrod: always bisect the piece with the largest
// error estimate, stop once the summed estimate meets rel_tol·|I|. Tails that
// carry no mass then cost one rule each.
Integral1D integrate_1d(const std::function<double(double)>& f, std::vector<double> points, double rel_tol,
                        double abs_tol) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  struct Piece {
    double a, b, value, error;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  auto eval = [&](double a, double b) {
    double err = 0.0;
    const double v = GK::integrate(f, a, b, 0, 0.0, &err);
    return Piece{a, b, v, err};
  };
  std::priority_queue<Piece> queue;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i + 1] > points[i]) queue.push(eval(points[i], points[i + 1]));
  auto totals = [&] {
    auto copy = queue;
    CompensatedSum v;
    double e = 0.0;
    while (!copy.empty()) {
      v.add(copy.top().value);
      e += copy.top().error;
      copy.pop();
    }
    return std::pair{v.value(), e};
  };
  double value = 0.0, error = 0.0;
  for (int it = 0; it < 4000 && !queue.empty(); ++it) {
    if (it % 16 == 0 || queue.top().error < 1e-300) {
      std::tie(value, error) = totals();
      if (error <= std::max(rel_tol * std::abs(value), abs_tol) || error < 1e-300) return {value, error};
    }
    const Piece worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    queue.pop();
    queue.push(eval(worst.a, mid));
    queue.push(eval(mid, worst.b));
  }
  std::tie(value, error) = totals();
  return {value, error};
}

Integral1D integrate_1d_endpoint_singular(const std::function<double(double)>& f, double a, double b,
                                          double rel_tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  const double v = integrator.integrate(f, a, b, rel_tol, &err, &l1);
  return {v, err};
}

}  // namespace conegeom

#include <doctest.h>

#include <cmath>

#include "conegeom/asymptotics.hpp"
#include "conegeom/errors.hpp"

using namespace conegeom;

TEST_CASE("beta power in 50-digit arithmetic") {
  const HighPrecision ref("0.472298803562101664235962193577");
  CHECK(abs(beta_power_exact(2, 10.0) - ref) < HighPrecision("1e-29"));
  const HighPrecision ref3("0.3419221475362485257686808448677175773809");
  CHECK(abs(beta_power_exact(3, 16.0) - ref3) < HighPrecision("1e-29"));
}

TEST_CASE("weighted beta reduces to beta at a = 0") {
  CHECK(abs(weighted_beta_exact(2, 10.0, 0.0) - beta_power_exact(2, 10.0)) < HighPrecision("1e-28"));
  CHECK(weighted_beta_exact(3, 8.0, 0.5).convert_to<double>() ==
        doctest::Approx(0.1784994170131640422002664823630654951304).epsilon(1e-14));
}

TEST_CASE("corrected constant makes p^2 residual shrink") {
  for (int n : {2, 3, 5}) {
    double prev = INFINITY;
    for (int k = 8; k <= 16; ++k) {
      ExpansionResult r = beta_power_expansion(n, std::ldexp(1.0, k));
      CHECK(std::abs(r.p2_residual) <= prev);
      prev = std::abs(r.p2_residual);
    }
    CHECK(prev < 11.0);
  }
}

TEST_CASE("printed constant leaves an O(1) p^2 residual") {
  // the constants differ by (n+1)(n^2+2n+3)/4, entering with weight n/2
  for (int n : {2, 3, 5}) {
    const double p = 4096.0;
    ExpansionResult a = beta_power_expansion(n, p, LemmaConstant::printed);
    ExpansionResult b = beta_power_expansion(n, p, LemmaConstant::corrected);
    CHECK(a.p2_residual - b.p2_residual == doctest::Approx(n * (n + 1) * (n * n + 2 * n + 3) / 8.0).epsilon(1e-9));
  }
}

TEST_CASE("table decay over a grid of weights") {
  auto rows = appendix_table({2, 3}, {0.0, 0.5}, 6, 10);
  CHECK(rows.size() == 20);
  CHECK(p2_residual_decays(rows));
}

TEST_CASE("three-term Stirling values") {
  StirlingResult s = stirling_terms(10.0);
  CHECK(std::abs(s.rel_error) == doctest::Approx(2.674053735473081e-6).epsilon(1e-6));
  CHECK(std::abs(stirling_terms(50.0).rel_error) < 3e-8);
  CHECK(std::abs(stirling_terms(100.0).rel_error) < std::abs(s.rel_error));
}

TEST_CASE("lemma constant names") {
  CHECK(parse_lemma_constant(to_string(LemmaConstant::printed)) == LemmaConstant::printed);
  CHECK(parse_lemma_constant("corrected") == LemmaConstant::corrected);
  CHECK_THROWS_AS(parse_lemma_constant("bogus"), GeometryError);
}

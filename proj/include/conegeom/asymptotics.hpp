#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace conegeom {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct ExpansionResult {
  int n = 0;
  double a = 0.0;
  double p = 0.0;
  HighPrecision exact;
  double expansion = 0.0;
  double residual = 0.0;  // exact - expansion, formed in high precision
  double p2_residual = 0.0;
};

/// Which a-independent 1/p^2 constant the expansion uses.
/// corrected: -(n+1)(n+3)/4, the value the Stirling series actually produces.
/// printed:   -(n+1)(n^2+3n+6)/4, the published value; kept for comparison.
enum class LemmaConstant { corrected, printed };

/// B(p+1, (n+1)/2)^{n/p} in 50-digit arithmetic.
HighPrecision beta_power_exact(int n, double p);
/// 1 - n(n+1)/(2p) log p + (n/p) log Γ((n+1)/2) + the 1/p^2 terms (dropped when second_order is false).
HighPrecision beta_power_expansion_hp(int n, double p, double a = 0.0, LemmaConstant c = LemmaConstant::corrected,
                                      bool second_order = true);
ExpansionResult beta_power_expansion(int n, double p, LemmaConstant c = LemmaConstant::corrected);

/// (∫_0^1 u^p (1-u)^{(n-1)/2} (1 - a(1-u))^{(n-1)/2} du)^{n/p}, by 50-digit double-exponential quadrature.
HighPrecision weighted_beta_exact(int n, double p, double a);
ExpansionResult weighted_beta_expansion(int n, double p, double a, LemmaConstant c = LemmaConstant::corrected);

struct StirlingResult {
  double x;
  double approx;
  double exact;
  double rel_error;
};
/// √(2π) x^{x-1/2} e^{-x} [1 + 1/(12x) + 1/(288x^2)] against Γ(x).
StirlingResult stirling_terms(double x);

/// One row per (n, a, p) with p = 2^k, k in [kmin, kmax].
std::vector<ExpansionResult> appendix_table(const std::vector<int>& ns, const std::vector<double>& as, int kmin,
                                            int kmax, LemmaConstant c = LemmaConstant::corrected);
/// p^2 |residual| non-increasing along each doubling run of the table.
bool p2_residual_decays(const std::vector<ExpansionResult>& rows);

std::string to_string(LemmaConstant c);
LemmaConstant parse_lemma_constant(const std::string& name);

}  // namespace conegeom

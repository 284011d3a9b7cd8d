#pragma once

namespace etaint::eta {

enum class EtaPath { series, product, modular_accelerated };

/// Which power of η a series evaluates.
enum class EtaPower { one = 1, three = 3 };

/// η^n(ix) together with an absolute bound on the series truncation error.
struct EtaValue {
  double value = 0.0;
  double trunc_bound = 0.0;
  int terms_used = 0;
  EtaPath path = EtaPath::series;
};

/// Hard cap on series terms; never reached for tol >= 1e-300 because the
/// working nome is at most e^{−2π}.
inline constexpr int kTermBudget = 10000;

/// η(ix), x > 0, from the pentagonal series
///   η(ix) = Σ_{n≥0} c_n q^{(2n+1)²/24},  q = e^{−2πx},
/// with c_n = (2/√3)cos((2n+1)π/6) ∈ {1, 0, −1, −1, 0, 1} (period 6).
/// For x < 1 the value is obtained from η(ix) = x^{−1/2} η(i/x).
/// Guarantees |value − η(ix)| <= trunc_bound <= tol.
EtaValue eta(double x, double tol);

/// η³(ix), x > 0, from η³(ix) = Σ (−1)^n (2n+1) q^{(2n+1)²/8}; uses
/// η³(ix) = x^{−3/2} η³(i/x) for x < 1. The tail bound is the first
/// omitted term (alternating, decreasing).
EtaValue eta_cubed(double x, double tol);

/// Partial product q^{1/24} ∏_{k=1}^{factors} (1 − q^k). Reference path only.
double eta_product(double x, int factors);

/// Smallest number of series terms N (n = 0..N−1) whose tail bound is below
/// tol, for a working argument x_eff >= 1. Always >= 1.
int trunc_terms_needed(double x_eff, EtaPower power, double tol);

/// η^n(ix) for n ∈ {0, 1, 3} to full double precision (relative truncation
/// below 1e-17). Returns exactly 0 once the leading term underflows.
double eta_pow(double x, int n);

}  // namespace etaint::eta

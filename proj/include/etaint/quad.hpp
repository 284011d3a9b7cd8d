#pragma once

#include <optional>
#include <string_view>

namespace etaint::quad {

enum class TailMethod { exp_bound, algebraic_correction, none };

std::string_view to_string(TailMethod m);

/// Estimate of ∫₀^∞ g(x) dx.
///
/// err_est already contains the adaptive panel estimate, the bound on the
/// truncated tail [cutoff, ∞) and the bound on any discarded mass near 0.
struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  long evals = 0;
  double cutoff = 0.0;
  TailMethod tail_method = TailMethod::none;
};

/// Weight functions f(x) that multiply η^n(ix).
enum class KernelForm {
  power,              // x^{−s}
  exp,                // e^{−yx}
  exp_over_x,         // e^{−yx}/x
  cos,                // cos(yx)
  sin,                // sin(yx)
  exp_recip,          // x^{−1/2} e^{−a/x}
  cos_recip,          // x^{−1/2} cos(a/x)
  erf_weight,         // x^{−1/2} erf(√(bx))
  scaled_erfc_recip,  // x^{−1/2} e^{a/x} erfc(√(a/x))
  shifted_recip,      // (x + a)^{−p}
  sqrt_shift,         // √((√(x²+1) − 1)/(x²+1))
  laplace_sine_pair,  // Im (x − ia)^{−1/2}, the Laplace transform of sin(at)/√(πt)
};

std::string_view to_string(KernelForm f);

/// f(x)·η^n(ix) with its real parameter(s). `scale` is a constant prefactor.
struct KernelSpec {
  KernelForm form = KernelForm::exp;
  double param = 0.0;
  double exponent = 1.0;  // p of shifted_recip
  int eta_power = 1;      // 1 or 3
  double scale = 1.0;

  static KernelSpec power(double s, int n) { return {KernelForm::power, s, 1.0, n}; }
  static KernelSpec exp(double y, int n) { return {KernelForm::exp, y, 1.0, n}; }
  static KernelSpec exp_over_x(double y, int n) { return {KernelForm::exp_over_x, y, 1.0, n}; }
  static KernelSpec cos(double y, int n) { return {KernelForm::cos, y, 1.0, n}; }
  static KernelSpec sin(double y, int n) { return {KernelForm::sin, y, 1.0, n}; }
  static KernelSpec exp_recip(double a, int n) { return {KernelForm::exp_recip, a, 1.0, n}; }
  static KernelSpec cos_recip(double a, int n) { return {KernelForm::cos_recip, a, 1.0, n}; }
  static KernelSpec erf_weight(double b, int n) { return {KernelForm::erf_weight, b, 1.0, n}; }
  static KernelSpec scaled_erfc_recip(double a, int n) {
    return {KernelForm::scaled_erfc_recip, a, 1.0, n};
  }
  static KernelSpec shifted_recip(double a, double p, int n) {
    return {KernelForm::shifted_recip, a, p, n};
  }
  static KernelSpec sqrt_shift(int n) { return {KernelForm::sqrt_shift, 0.0, 1.0, n}; }
  static KernelSpec laplace_sine_pair(double a, int n) {
    return {KernelForm::laplace_sine_pair, a, 1.0, n};
  }

  KernelSpec scaled(double c) const {
    KernelSpec k = *this;
    k.scale *= c;
    return k;
  }
};

/// Oscillatory kernels are only accepted up to this frequency.
inline constexpr double kMaxFrequency = 40.0;
/// Evaluation budget of one adaptive integration.
inline constexpr long kEvalBudget = 100000;
/// Panels start here; the mass on [0, kLowerCut] is bounded analytically.
inline constexpr double kLowerCut = 1e-12;

struct QuadOptions {
  /// Multiplies the automatically chosen cutoff (cutoff-robustness checks).
  double cutoff_multiplier = 1.0;
  /// Replaces the automatic cutoff entirely.
  std::optional<double> cutoff_override;
};

/// The weight f(x) alone (no η factor, scale included).
double kernel_weight(const KernelSpec& k, double x);

/// Throws DomainError if the kernel parameters are out of range.
void validate(const KernelSpec& k);

/// ∫₀^∞ f(x) η^n(ix) dx to absolute tolerance tol (tol >= 1e-13).
///
/// The cutoff X is the smallest integer whose tail bound
/// ∫_X^∞ |f| e^{−nπx/12} dx (using η(ix) <= e^{−πx/12}) is below tol/10;
/// [1e-12, X] is then integrated by globally adaptive Gauss–Kronrod 7/15
/// panels, always bisecting the panel with the largest error.
QuadResult integrate(const KernelSpec& kernel, double tol, const QuadOptions& opts = {});

enum class Glaisher { eq11, eq17 };

/// (sinh x − sin x)/(x²(cosh x + cos x)) for eq11, and
/// sinh(x/2) sin(x/2)/(x(cosh x + cos x)) for eq17; both extended by 0 at x = 0.
double glaisher_integrand(Glaisher which, double x);

struct TailEstimate {
  double value = 0.0;
  double bound = 0.0;
};

/// ∫_X^∞ of the Glaisher integrand: 1/X with remainder bound for eq11,
/// zero with an exponential bound for eq17.
TailEstimate glaisher_tail(Glaisher which, double cutoff);

/// ∫₀^∞ of a Glaisher–Ramanujan integrand (no η factor), tol >= 1e-12.
QuadResult integrate_glaisher(Glaisher which, double tol, const QuadOptions& opts = {});

/// Integrals that appear on right-hand sides:
///   A2: (2/π)∫₀^∞ x e^{−ax²/π} sech x dx
///   A4: (2/π)∫₀^∞ e^{−ax²/π} sech x dx
///   A6: (2/π)∫_{√(πy)}^∞ x sech x dx
enum class AuxRhs { A2, A4, A6 };

QuadResult integrate_rhs_aux(AuxRhs which, double param, double tol,
                             const QuadOptions& opts = {});

/// Built-in Laplace pairs F(t) ↔ f(x) = ∫₀^∞ e^{−xt} F(t) dt.
enum class LaplacePair {
  exp_shift,       // F = e^{−at}           ↔ f = 1/(x + a)
  exp_shift_sqrt,  // F = e^{−at}/√(πt)     ↔ f = (x + a)^{−1/2}
  sine,            // F = sin(at)/√(πt)     ↔ f = Im (x − ia)^{−1/2}
};

std::string_view to_string(LaplacePair p);

/// Kernel f(x)·η^n(ix) on the x side of a pair.
KernelSpec pair_kernel(LaplacePair pair, double a, int n);

/// ∫₀^∞ F(t) L_n(t) dt, the t side of the pairing, computed in u = √t.
QuadResult integrate_pair_rhs(LaplacePair pair, double a, int n, double tol);

}  // namespace etaint::quad

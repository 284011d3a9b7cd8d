#include "etaint/quad.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "adaptive.hpp"
#include "etaint/closed_forms.hpp"
#include "etaint/error.hpp"
#include "etaint/eta.hpp"
#include "etaint/specfun.hpp"

namespace etaint::quad {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxCutoff = 1e5;
// Share of the tolerance given to the truncated tail; the panels get half.
constexpr double kTailShare = 0.1;
constexpr double kPanelShare = 0.5;

// |f(x)| <= amp · x^power · e^{−rate·x} for x >= X.
struct Envelope {
  double amp = 1.0;
  double power = 0.0;
  double rate = 0.0;
};

Envelope tail_envelope(const KernelSpec& k, double X) {
  const double inv_sqrt = 1.0 / std::sqrt(X);
  Envelope e;
  switch (k.form) {
    case KernelForm::power:
      if (k.param >= 0.0) {
        e.amp = std::pow(X, -k.param);
      } else {
        e.power = -k.param;
      }
      break;
    case KernelForm::exp:
      e.rate = k.param;
      break;
    case KernelForm::exp_over_x:
      e.amp = 1.0 / X;
      e.rate = k.param;
      break;
    case KernelForm::cos:
    case KernelForm::sin:
      break;
    case KernelForm::exp_recip:
    case KernelForm::cos_recip:
    case KernelForm::erf_weight:
    case KernelForm::scaled_erfc_recip:
    case KernelForm::sqrt_shift:
      e.amp = inv_sqrt;
      break;
    case KernelForm::shifted_recip:
      e.amp = std::pow(X + k.param, -k.exponent);
      break;
    case KernelForm::laplace_sine_pair:
      e.amp = 0.5 * k.param * inv_sqrt / X;
      break;
  }
  e.amp *= std::abs(k.scale);
  return e;
}

// ∫_X^∞ amp x^m e^{−κx} dx <= amp X^m e^{−κX}/(κ − m/X) for κX > m.
double tail_bound(const KernelSpec& k, double X) {
  const Envelope e = tail_envelope(k, X);
  const double kappa = k.eta_power * kPi / 12.0 + e.rate;
  const double denom = kappa - e.power / X;
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return e.amp * std::pow(X, e.power) * std::exp(-kappa * X) / denom;
}

// Bound on ∫₀^{kLowerCut} |f| η^n. Near 0, |f(x)| <= C x^{−M} and
// η^n(ix) <= x^{−n/2} e^{−nπ/(12x)}; the product is increasing on
// (0, kLowerCut] so the bound is kLowerCut times its value there.
double lower_cut_bound(const KernelSpec& k) {
  double C = 1.0;
  double M = 0.0;
  switch (k.form) {
    case KernelForm::power:
      M = std::max(k.param, 0.0);
      break;
    case KernelForm::exp_over_x:
      M = 1.0;
      break;
    case KernelForm::exp_recip:
    case KernelForm::cos_recip:
    case KernelForm::scaled_erfc_recip:
      M = 0.5;
      break;
    case KernelForm::erf_weight:
      C = 2.0 * std::sqrt(k.param / kPi);
      break;
    case KernelForm::shifted_recip:
      if (k.param > 0.0) {
        C = std::pow(k.param, -k.exponent);
      } else {
        M = k.exponent;
      }
      break;
    case KernelForm::laplace_sine_pair:
      C = 1.0 / std::sqrt(k.param);
      break;
    case KernelForm::exp:
    case KernelForm::cos:
    case KernelForm::sin:
    case KernelForm::sqrt_shift:
      break;
  }
  const double x = kLowerCut;
  const double n = k.eta_power;
  const double log_bound = std::log(x * C * std::abs(k.scale)) -
                           (M + 0.5 * n) * std::log(x) - n * kPi / (12.0 * x);
  return std::exp(log_bound);
}

double choose_cutoff(double start, double tail_budget,
                     const auto& bound_at, const QuadOptions& opts) {
  if (opts.cutoff_override) {
    const double X = *opts.cutoff_override;
    if (!(X > 0.0) || !std::isfinite(X)) throw DomainError("cutoff must be > 0");
    return X;
  }
  double X = start;
  while (bound_at(X) >= tail_budget) {
    X += 1.0;
    if (X > kMaxCutoff) throw NonConvergence("no cutoff meets the tail budget");
  }
  return X * opts.cutoff_multiplier;
}

// 0, then a doubling grid 1/16 … up to X, refined to at most `max_width`.
std::vector<double> breakpoints(double lo, double X, double max_width) {
  std::vector<double> pts{lo};
  for (double b : {0.02, 0.05, 0.1, 0.2, 0.5}) {
    if (b > lo && b < X) pts.push_back(b);
  }
  for (double b = 1.0; b < X; b *= 2.0) {
    if (b > pts.back()) pts.push_back(b);
  }
  pts.push_back(X);
  std::vector<double> refined{pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double a = refined.back();
    const double b = pts[i];
    const int pieces = static_cast<int>(std::ceil((b - a) / max_width));
    for (int j = 1; j < pieces; ++j) refined.push_back(a + (b - a) * j / pieces);
    refined.push_back(b);
  }
  return refined;
}

void check_tol(double tol, double floor, const char* fn) {
  require_finite(tol, fn);
  if (!(tol >= floor)) {
    throw DomainError(std::string(fn) + ": tol must be >= " + std::to_string(floor));
  }
}

// sech x without overflow.
double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

}  // namespace

std::string_view to_string(TailMethod m) {
  switch (m) {
    case TailMethod::exp_bound: return "exp-bound";
    case TailMethod::algebraic_correction: return "algebraic-correction";
    case TailMethod::none: return "none";
  }
  return "?";
}

std::string_view to_string(KernelForm f) {
  switch (f) {
    case KernelForm::power: return "power";
    case KernelForm::exp: return "exp";
    case KernelForm::exp_over_x: return "exp_over_x";
    case KernelForm::cos: return "cos";
    case KernelForm::sin: return "sin";
    case KernelForm::exp_recip: return "exp_recip";
    case KernelForm::cos_recip: return "cos_recip";
    case KernelForm::erf_weight: return "erf_weight";
    case KernelForm::scaled_erfc_recip: return "scaled_erfc_recip";
    case KernelForm::shifted_recip: return "shifted_recip";
    case KernelForm::sqrt_shift: return "sqrt_shift_kernel";
    case KernelForm::laplace_sine_pair: return "laplace_sine_pair";
  }
  return "?";
}

std::string_view to_string(LaplacePair p) {
  switch (p) {
    case LaplacePair::exp_shift: return "exp_shift";
    case LaplacePair::exp_shift_sqrt: return "exp_shift_sqrt";
    case LaplacePair::sine: return "sine";
  }
  return "?";
}

void validate(const KernelSpec& k) {
  require_finite(k.param, "kernel parameter");
  require_finite(k.exponent, "kernel exponent");
  require_finite(k.scale, "kernel scale");
  if (k.eta_power != 1 && k.eta_power != 3) {
    throw DomainError("kernel: eta power must be 1 or 3");
  }
  const auto need = [&](bool ok, const char* what) {
    if (!ok) {
      throw DomainError(std::string("kernel ") + std::string(to_string(k.form)) +
                        ": " + what + ", got " + std::to_string(k.param));
    }
  };
  switch (k.form) {
    case KernelForm::power:
    case KernelForm::sqrt_shift:
      break;
    case KernelForm::exp:
    case KernelForm::exp_over_x:
    case KernelForm::exp_recip:
    case KernelForm::cos_recip:
    case KernelForm::erf_weight:
    case KernelForm::scaled_erfc_recip:
      need(k.param >= 0.0, "parameter must be >= 0");
      break;
    case KernelForm::cos:
    case KernelForm::sin:
      need(k.param >= 0.0 && k.param <= kMaxFrequency, "frequency must lie in [0, 40]");
      break;
    case KernelForm::shifted_recip:
      need(k.param >= 0.0, "shift must be >= 0");
      if (!(k.exponent > 0.0)) throw DomainError("kernel shifted_recip: p must be > 0");
      break;
    case KernelForm::laplace_sine_pair:
      need(k.param > 0.0, "parameter must be > 0");
      break;
  }
}

double kernel_weight(const KernelSpec& k, double x) {
  double f = 0.0;
  switch (k.form) {
    case KernelForm::power: f = std::pow(x, -k.param); break;
    case KernelForm::exp: f = std::exp(-k.param * x); break;
    case KernelForm::exp_over_x: f = std::exp(-k.param * x) / x; break;
    case KernelForm::cos: f = std::cos(k.param * x); break;
    case KernelForm::sin: f = std::sin(k.param * x); break;
    case KernelForm::exp_recip: f = std::exp(-k.param / x) / std::sqrt(x); break;
    case KernelForm::cos_recip: f = std::cos(k.param / x) / std::sqrt(x); break;
    case KernelForm::erf_weight:
      f = specfun::erf(std::sqrt(k.param * x)) / std::sqrt(x);
      break;
    case KernelForm::scaled_erfc_recip:
      f = specfun::erfc_scaled(std::sqrt(k.param / x)) / std::sqrt(x);
      break;
    case KernelForm::shifted_recip: f = std::pow(x + k.param, -k.exponent); break;
    case KernelForm::sqrt_shift: {
      const double r2 = x * x + 1.0;
      // √(x²+1) − 1 = x²/(√(x²+1) + 1)
      f = std::sqrt(x * x / (std::sqrt(r2) + 1.0) / r2);
      break;
    }
    case KernelForm::laplace_sine_pair: {
      const double a = k.param;
      const double r = std::hypot(x, a);
      // Im (x − ia)^{−1/2} = √((r − x)/2)/r, with r − x = a²/(r + x).
      f = std::sqrt(0.5 * a * a / (r + x)) / r;
      break;
    }
  }
  return k.scale * f;
}

QuadResult integrate(const KernelSpec& kernel, double tol, const QuadOptions& opts) {
  validate(kernel);
  check_tol(tol, 1e-13, "integrate");

  const auto bound_at = [&](double X) { return tail_bound(kernel, X); };
  const double X = choose_cutoff(1.0, kTailShare * tol, bound_at, opts);
  const double tail = tail_bound(kernel, X);
  const double lower = lower_cut_bound(kernel);

  double width = X;
  if (kernel.form == KernelForm::cos || kernel.form == KernelForm::sin) {
    if (kernel.param > 0.0) width = std::min(width, kPi / kernel.param);
  }
  const std::vector<double> pts = breakpoints(kLowerCut, X, width);

  const int n = kernel.eta_power;
  const auto g = [&](double x) {
    const double e = eta::eta_pow(x, n);
    return e == 0.0 ? 0.0 : kernel_weight(kernel, x) * e;
  };
  const auto r = detail::adaptive_gk(g, pts, kPanelShare * tol, kEvalBudget);
  return QuadResult{r.value, r.err + tail + lower, r.evals, X, TailMethod::exp_bound};
}

double glaisher_integrand(Glaisher which, double x) {
  if (x == 0.0) return 0.0;
  if (which == Glaisher::eq11) {
    if (x < 1.0) {
      // (sinh x − sin x)/2 = Σ x^{4k+3}/(4k+3)!, (cosh x + cos x)/2 = Σ x^{4k}/(4k)!
      const double x4 = x * x * x * x;
      double num_term = x / 6.0;  // x^{4k+1}/(4k+3)!
      double den_term = 1.0;      // x^{4k}/(4k)!
      double num = num_term;
      double den = den_term;
      for (int k = 1; k < 8; ++k) {
        num_term *= x4 / ((4.0 * k) * (4.0 * k + 1) * (4.0 * k + 2) * (4.0 * k + 3));
        den_term *= x4 / ((4.0 * k - 3) * (4.0 * k - 2) * (4.0 * k - 1) * (4.0 * k));
        num += num_term;
        den += den_term;
      }
      return num / den;
    }
    const double e = std::exp(-x);
    const double num = 1.0 - e * e - 2.0 * std::sin(x) * e;
    const double den = 1.0 + e * e + 2.0 * std::cos(x) * e;
    return num / (den * x * x);
  }
  if (x < 1.0) {
    return std::sinh(0.5 * x) * std::sin(0.5 * x) / (x * (std::cosh(x) + std::cos(x)));
  }
  const double e = std::exp(-x);
  const double ratio = std::exp(-0.5 * x) * (1.0 - e) / (1.0 + e * e + 2.0 * std::cos(x) * e);
  return ratio * std::sin(0.5 * x) / x;
}

TailEstimate glaisher_tail(Glaisher which, double cutoff) {
  require_finite(cutoff, "glaisher_tail");
  if (!(cutoff >= 2.0)) throw DomainError("glaisher_tail: cutoff must be >= 2");
  const double X = cutoff;
  const double e = std::exp(-X);
  if (which == Glaisher::eq11) {
    // integrand = 1/x² + (r − 1)/x², |r − 1| <= (√2 + e^{−x})/(e^x/2 − 1)
    const double bound = (std::numbers::sqrt2 + e) / (X * X) * 2.0 * e / (1.0 - 2.0 * e);
    return {1.0 / X, bound};
  }
  // |integrand| <= e^{−x/2}/(x(1 − 2e^{−X}))
  return {0.0, 2.0 * std::exp(-0.5 * X) / (X * (1.0 - 2.0 * e))};
}

QuadResult integrate_glaisher(Glaisher which, double tol, const QuadOptions& opts) {
  check_tol(tol, 1e-12, "integrate_glaisher");
  const auto bound_at = [&](double X) { return glaisher_tail(which, X).bound; };
  const double X = choose_cutoff(2.0, kTailShare * tol, bound_at, opts);
  const TailEstimate tail = glaisher_tail(which, X);
  const std::vector<double> pts = breakpoints(0.0, X, 2.0);
  const auto g = [which](double x) { return glaisher_integrand(which, x); };
  const auto r = detail::adaptive_gk(g, pts, kPanelShare * tol, kEvalBudget);
  return QuadResult{r.value + tail.value, r.err + tail.bound, r.evals, X,
                    which == Glaisher::eq11 ? TailMethod::algebraic_correction
                                            : TailMethod::exp_bound};
}

QuadResult integrate_rhs_aux(AuxRhs which, double param, double tol,
                             const QuadOptions& opts) {
  require_finite(param, "integrate_rhs_aux");
  check_tol(tol, 1e-13, "integrate_rhs_aux");
  if (param < 0.0) throw DomainError("integrate_rhs_aux: parameter must be >= 0");

  const double lo = which == AuxRhs::A6 ? std::sqrt(kPi * param) : 0.0;
  const bool linear = which != AuxRhs::A4;
  // (2/π)·∫_X^∞ x^{0|1}·2e^{−x} dx
  const auto bound_at = [&](double X) {
    return 4.0 / kPi * (linear ? X + 1.0 : 1.0) * std::exp(-X);
  };
  const double X = choose_cutoff(std::floor(lo) + 1.0, kTailShare * tol, bound_at, opts);
  const double gauss = which == AuxRhs::A6 ? 0.0 : param / kPi;
  const auto g = [&](double x) {
    const double w = linear ? x : 1.0;
    return 2.0 / kPi * w * std::exp(-gauss * x * x) * sech(x);
  };
  std::vector<double> pts = breakpoints(lo, X, 2.0);
  const auto r = detail::adaptive_gk(g, pts, kPanelShare * tol, kEvalBudget);
  return QuadResult{r.value, r.err + bound_at(X), r.evals, X, TailMethod::exp_bound};
}

KernelSpec pair_kernel(LaplacePair pair, double a, int n) {
  switch (pair) {
    case LaplacePair::exp_shift: return KernelSpec::shifted_recip(a, 1.0, n);
    case LaplacePair::exp_shift_sqrt: return KernelSpec::shifted_recip(a, 0.5, n);
    case LaplacePair::sine: return KernelSpec::laplace_sine_pair(a, n);
  }
  throw DomainError("unknown Laplace pair");
}

QuadResult integrate_pair_rhs(LaplacePair pair, double a, int n, double tol) {
  require_finite(a, "integrate_pair_rhs");
  check_tol(tol, 1e-13, "integrate_pair_rhs");
  if (n != 1 && n != 3) throw DomainError("integrate_pair_rhs: n must be 1 or 3");
  if (pair == LaplacePair::sine ? !(a > 0.0) : !(a >= 0.0)) {
    throw DomainError("integrate_pair_rhs: parameter out of range");
  }

  // With t = u²: ∫ F(t) L(t) dt = ∫ 2·[u F(u²)]·L(u²) du.
  const auto u_times_F = [pair, a](double u) {
    switch (pair) {
      case LaplacePair::exp_shift: return u * std::exp(-a * u * u);
      case LaplacePair::exp_shift_sqrt: return std::exp(-a * u * u) / std::sqrt(kPi);
      case LaplacePair::sine: return std::sin(a * u * u) / std::sqrt(kPi);
    }
    return 0.0;
  };
  const auto laplace = [n](double t) {
    return n == 1 ? closed_forms::laplace_eta(t) : closed_forms::laplace_eta3(t);
  };
  const auto g = [&](double u) { return 2.0 * u_times_F(u) * laplace(u * u); };

  // Envelopes: L_1(u²) <= (√π/u) e^{−γu}, γ = √(3π) − 2√(π/3); L_3(u²) <= 2e^{−√π u};
  // |uF| <= u for exp_shift, <= 1/√π otherwise.
  const double gamma1 = std::sqrt(3.0 * kPi) - 2.0 * std::sqrt(kPi / 3.0);
  const double rp = std::sqrt(kPi);
  const bool linear = pair == LaplacePair::exp_shift;
  const auto bound_at = [&](double U) {
    if (n == 3) {
      return linear ? 4.0 * std::exp(-rp * U) * (U / rp + 1.0 / kPi)
                    : 4.0 / kPi * std::exp(-rp * U);
    }
    return linear ? 2.0 * rp * std::exp(-gamma1 * U) / gamma1
                  : 2.0 * std::exp(-gamma1 * U) / (U * gamma1);
  };
  const double U = choose_cutoff(1.0, kTailShare * tol, bound_at, QuadOptions{});

  std::vector<double> pts;
  if (pair == LaplacePair::sine) {
    // Zeros of sin(a u²) keep each panel to half an oscillation.
    for (int k = 0;; ++k) {
      const double u = std::sqrt(k * kPi / a);
      if (u >= U) break;
      pts.push_back(u);
    }
    pts.push_back(U);
  } else {
    pts = breakpoints(0.0, U, 1.0);
  }
  const auto r = detail::adaptive_gk(g, pts, kPanelShare * tol, kEvalBudget);
  return QuadResult{r.value, r.err + bound_at(U), r.evals, U, TailMethod::exp_bound};
}

}  // namespace etaint::quad

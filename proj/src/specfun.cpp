#include "etaint/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "etaint/error.hpp"

namespace etaint::specfun {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// B2, B4, ..., B16.
constexpr std::array<double, 8> kBernoulliEven = {
    1.0 / 6.0,      -1.0 / 30.0,   1.0 / 42.0,     -1.0 / 30.0,
    5.0 / 66.0,     -691.0 / 2730.0, 7.0 / 6.0,    -3617.0 / 510.0};

constexpr int kZetaShift = 25;

void require_positive(double x, const char* fn) {
  require_finite(x, fn);
  if (!(x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be > 0, got " +
                      std::to_string(x));
  }
}

// ζ(k) for k = 2..63, used by the lnΓ power series about x = 1.
const std::array<double, 64>& zeta_integers() {
  static const std::array<double, 64> table = [] {
    std::array<double, 64> t{};
    for (int k = 2; k < 64; ++k) t[k] = hurwitz_zeta(k, 1.0);
    return t;
  }();
  return table;
}

// lnΓ(1 + z) = −γz + Σ_{k≥2} (−z)^k ζ(k)/k, |z| <= 1/2.
double log_gamma_1p_series(double z) {
  const auto& zeta = zeta_integers();
  double sum = -kEulerGamma * z;
  double power = -z;
  for (int k = 2; k < 64; ++k) {
    power *= -z;
    const double term = power * zeta[k] / k;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double log_gamma_stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double corr = 0.0;
  double p = inv;
  for (int k = 1; k <= 7; ++k) {
    corr += kBernoulliEven[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) +
         corr;
}

// (x^{1−s} − 1)/(s − 1), stable as s → 1.
double pole_regular_part(double x, double s) {
  const double lx = std::log(x);
  const double u = (1.0 - s) * lx;
  if (std::abs(u) < 0.5) {
    const double ratio = (u == 0.0) ? 1.0 : std::expm1(u) / u;
    return -lx * ratio;
  }
  return (std::pow(x, 1.0 - s) - 1.0) / (s - 1.0);
}

double hurwitz_regular_unchecked(double s, double a) {
  double sum = 0.0;
  for (int k = 0; k < kZetaShift; ++k) sum += std::pow(k + a, -s);

  const double x = kZetaShift + a;
  const double xs = std::pow(x, -s);
  sum += pole_regular_part(x, s);
  sum += 0.5 * xs;

  // Σ_j B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
  const double inv_x2 = 1.0 / (x * x);
  double factor = 0.5 * s * xs / x;
  double corr = kBernoulliEven[0] * factor;
  for (int j = 2; j <= 8; ++j) {
    factor *= (s + 2 * j - 3) * (s + 2 * j - 2) / ((2.0 * j - 1.0) * (2.0 * j)) *
              inv_x2;
    corr += kBernoulliEven[j - 1] * factor;
  }
  return sum + corr;
}

void check_hurwitz_a(double a) {
  require_finite(a, "hurwitz_zeta(a)");
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz_zeta: a must lie in (0, 1], got " +
                      std::to_string(a));
  }
}

double erf_series(double x) {
  // erf(x) = 2/√π · e^{−x²} · Σ (2x²)^n x / (1·3·…·(2n+1)); all terms positive.
  const double two_x2 = 2.0 * x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= two_x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x * x) * sum;
}

// √π e^{x²} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …)))), x >= 2.
double erfc_scaled_cf(double x) {
  constexpr double kTiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int j = 1; j < 20000; ++j) {
    const double aj = 0.5 * j;
    d = x + aj * d;
    if (d == 0.0) d = kTiny;
    d = 1.0 / d;
    c = x + aj / c;
    if (c == 0.0) c = kTiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) return log_gamma_1p_series(x) - std::log(x);
  if (x < 1.5) return log_gamma_1p_series(x - 1.0);
  if (x < 2.5) return std::log1p(x - 2.0) + log_gamma_1p_series(x - 2.0);
  if (x < 15.0) {
    // Walk down into [1.5, 2.5); the logs being added are all positive.
    double prod = 1.0;
    double y = x;
    while (y >= 2.5) {
      y -= 1.0;
      prod *= y;
    }
    return std::log(prod) + log_gamma(y);
  }
  return log_gamma_stirling(x);
}

double gamma(double x) { return std::exp(log_gamma(x)); }

double digamma(double x) {
  require_positive(x, "digamma");
  double acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double p = inv2;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulliEven[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return acc + std::log(x) - 0.5 / x - series;
}

double hurwitz_zeta_regular(double s, double a) {
  require_finite(s, "hurwitz_zeta(s)");
  check_hurwitz_a(a);
  if (s == 1.0) return -digamma(a);
  return hurwitz_regular_unchecked(s, a);
}

double hurwitz_zeta(double s, double a) {
  require_finite(s, "hurwitz_zeta(s)");
  check_hurwitz_a(a);
  if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  return hurwitz_regular_unchecked(s, a) + 1.0 / (s - 1.0);
}

double hurwitz_zeta_combo(double w) {
  require_finite(w, "hurwitz_zeta_combo");
  if (w == 1.0) {
    return -(digamma(1.0 / 12) + digamma(11.0 / 12) - digamma(5.0 / 12) -
             digamma(7.0 / 12));
  }
  // The 1/(w−1) pole parts cancel exactly between the four terms.
  return hurwitz_regular_unchecked(w, 1.0 / 12) +
         hurwitz_regular_unchecked(w, 11.0 / 12) -
         hurwitz_regular_unchecked(w, 5.0 / 12) -
         hurwitz_regular_unchecked(w, 7.0 / 12);
}

double hurwitz_zeta_combo_slope_at_zero() {
  return log_gamma(1.0 / 12) + log_gamma(11.0 / 12) - log_gamma(5.0 / 12) -
         log_gamma(7.0 / 12);
}

double dirichlet_beta(double s) {
  require_finite(s, "dirichlet_beta");
  const double diff = (s == 1.0)
                          ? digamma(0.75) - digamma(0.25)
                          : hurwitz_regular_unchecked(s, 0.25) -
                                hurwitz_regular_unchecked(s, 0.75);
  return std::pow(4.0, -s) * diff;
}

double erf(double x) {
  require_finite(x, "erf");
  if (x < 0.0) return -erf(-x);
  if (x < 2.0) return erf_series(x);
  return 1.0 - erfc(x);
}

double erfc(double x) {
  require_finite(x, "erfc");
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < 2.0) return 1.0 - erf_series(x);
  if (x > 27.3) return 0.0;
  return std::exp(-x * x) * erfc_scaled_cf(x);
}

double erfc_scaled(double x) {
  require_finite(x, "erfc_scaled");
  if (x < 0.0) {
    throw DomainError("erfc_scaled: argument must be >= 0, got " +
                      std::to_string(x));
  }
  if (x < 2.0) return std::exp(x * x) * (1.0 - erf_series(x));
  return erfc_scaled_cf(x);
}

}  // namespace etaint::specfun

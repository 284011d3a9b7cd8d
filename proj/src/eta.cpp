#include "etaint/eta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "etaint/error.hpp"

namespace etaint::eta {
namespace {

constexpr double kPi = std::numbers::pi;

// (2/√3)·cos((2n+1)π/6), exactly.
constexpr std::array<int, 6> kPentagonalSign = {1, 0, -1, -1, 0, 1};

// Exponent divisor: q^{(2n+1)²/24} for η, q^{(2n+1)²/8} for η³, with
// q = e^{−2πx}, i.e. exp(−π x (2n+1)² / d) with d = 12 or 4.
double exponent_divisor(EtaPower p) { return p == EtaPower::one ? 12.0 : 4.0; }

double tail_bound(double x, EtaPower p, int n_terms) {
  const double m = 2.0 * n_terms + 1.0;
  const double first = std::exp(-kPi * x * m * m / exponent_divisor(p));
  if (p == EtaPower::three) return m * first;
  // Consecutive exponents of the η series differ by (n+1)/3 powers of q, so
  // from index N on the terms are dominated by a geometric series.
  const double ratio = std::exp(-2.0 * kPi * x * (n_terms + 1.0) / 3.0);
  return first / (1.0 - ratio);
}

double partial_sum(double x, EtaPower p, int n_terms) {
  const double d = exponent_divisor(p);
  double sum = 0.0;
  for (int n = 0; n < n_terms; ++n) {
    const double m = 2.0 * n + 1.0;
    const double e = std::exp(-kPi * x * m * m / d);
    if (p == EtaPower::one) {
      sum += kPentagonalSign[n % 6] * e;
    } else {
      sum += ((n % 2 == 0) ? m : -m) * e;
    }
  }
  return sum;
}

// Below this the whole series underflows (the tail is smaller still).
constexpr double kLogUnderflow = -745.0;

// ln of the leading term of η^n(ix), including the modular prefactor.
double log_leading_term(double x, EtaPower p) {
  const double x_eff = x < 1.0 ? 1.0 / x : x;
  const double prefactor = x < 1.0 ? -0.5 * static_cast<int>(p) * std::log(x) : 0.0;
  return prefactor - kPi * x_eff / exponent_divisor(p);
}

void check_args(double x, double tol, const char* fn) {
  require_finite(x, fn);
  require_finite(tol, fn);
  if (!(x > 0.0)) throw DomainError(std::string(fn) + ": x must be > 0");
  if (!(tol > 0.0)) throw DomainError(std::string(fn) + ": tol must be > 0");
}

EtaValue evaluate(double x, double tol, EtaPower p, const char* fn) {
  check_args(x, tol, fn);
  const bool accelerate = x < 1.0;
  const double x_eff = accelerate ? 1.0 / x : x;
  const double half_power = 0.5 * static_cast<int>(p);
  const double scale = accelerate ? std::pow(x, -half_power) : 1.0;
  const EtaPath path =
      accelerate ? EtaPath::modular_accelerated : EtaPath::series;
  if (log_leading_term(x, p) < kLogUnderflow) return EtaValue{0.0, 0.0, 1, path};
  const double inner_tol = tol / scale;

  const int n = trunc_terms_needed(x_eff, p, inner_tol);
  const double inner_bound = tail_bound(x_eff, p, n);
  if (inner_bound >= inner_tol && inner_bound > 0.0) {
    throw ToleranceUnreachable(std::string(fn) + ": term budget exhausted");
  }
  return EtaValue{scale * partial_sum(x_eff, p, n), scale * inner_bound, n,
                  path};
}

}  // namespace

int trunc_terms_needed(double x_eff, EtaPower power, double tol) {
  require_finite(x_eff, "trunc_terms_needed");
  if (!(x_eff >= 1.0)) {
    throw DomainError("trunc_terms_needed: working argument must be >= 1");
  }
  int n = 1;
  while (n < kTermBudget) {
    const double b = tail_bound(x_eff, power, n);
    if (b < tol || b == 0.0) break;
    ++n;
  }
  return n;
}

EtaValue eta(double x, double tol) {
  return evaluate(x, tol, EtaPower::one, "eta");
}

EtaValue eta_cubed(double x, double tol) {
  return evaluate(x, tol, EtaPower::three, "eta_cubed");
}

double eta_product(double x, int factors) {
  require_finite(x, "eta_product");
  if (!(x > 0.0)) throw DomainError("eta_product: x must be > 0");
  if (factors < 1) throw DomainError("eta_product: factors must be >= 1");
  double prod = std::exp(-kPi * x / 12.0);
  for (int k = 1; k <= factors; ++k) {
    prod *= -std::expm1(-2.0 * kPi * k * x);
  }
  return prod;
}

double eta_pow(double x, int n) {
  if (n == 0) return 1.0;
  if (n != 1 && n != 3) throw DomainError("eta_pow: power must be 0, 1 or 3");
  require_finite(x, "eta_pow");
  if (!(x > 0.0)) throw DomainError("eta_pow: x must be > 0");

  const EtaPower p = n == 1 ? EtaPower::one : EtaPower::three;
  const double log_lead = log_leading_term(x, p);
  if (log_lead < kLogUnderflow) return 0.0;
  const double lead = std::exp(log_lead);
  const double tol =
      std::max(1e-17 * lead, std::numeric_limits<double>::denorm_min());
  return evaluate(x, tol, p, "eta_pow").value;
}

}  // namespace etaint::eta

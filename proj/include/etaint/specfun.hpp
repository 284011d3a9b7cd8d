#pragma once

// Real special functions in double precision. Every function validates its
// argument (finite, inside the stated domain) and throws DomainError
// otherwise. All functions are pure and safe to call concurrently.

namespace etaint::specfun {

/// ln Γ(x) for x > 0, relative error below 1e-13 (absolute near the roots
/// x = 1 and x = 2, where a power series about each root is used).
double log_gamma(double x);

/// Γ(x) = exp(log_gamma(x)) for x > 0.
double gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0. Upward recurrence until x >= 8, then the
/// asymptotic series through B16. Absolute error below 1e-12.
double digamma(double x);

/// Hurwitz zeta ζ(s, a) for real s != 1 and a in (0, 1].
///
/// Euler–Maclaurin with 25 explicit terms and Bernoulli corrections through
/// B16. The formula continues analytically to s < 1, so negative s is fine;
/// for s a non-positive integer the correction series terminates and the
/// result is exact up to rounding.
double hurwitz_zeta(double s, double a);

/// Regular part ζ(s, a) − 1/(s − 1). Finite at s = 1, where it equals
/// −ψ(a). Evaluated without cancellation near the pole.
double hurwitz_zeta_regular(double s, double a);

/// Z(w) = ζ(w,1/12) + ζ(w,11/12) − ζ(w,5/12) − ζ(w,7/12), total on the real
/// line. At w = 1 the four poles cancel and the exact digamma limit is
/// returned.
double hurwitz_zeta_combo(double w);

/// Z'(0) = lnΓ(1/12) + lnΓ(11/12) − lnΓ(5/12) − lnΓ(7/12), from
/// ∂ζ(0, a)/∂s = lnΓ(a) − ½ ln 2π.
double hurwitz_zeta_combo_slope_at_zero();

/// Dirichlet beta β(s) = 4^{-s}[ζ(s,1/4) − ζ(s,3/4)] for any real s.
double dirichlet_beta(double s);

double erf(double x);
double erfc(double x);
/// e^{x²}·erfc(x) for x >= 0, without overflow for large x.
double erfc_scaled(double x);

}  // namespace etaint::specfun

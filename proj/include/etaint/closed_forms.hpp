#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etaint/params.hpp"

// Right-hand sides of the identities, evaluated from specfun primitives
// only. The three right-hand sides that are themselves integrals (A2, A4,
// A6) are delegated to quad::integrate_rhs_aux and marked as such.

namespace etaint::closed_forms {

enum class ClosedFormId {
  EQ5, EQ7, EQ8, EQ9, EQ10, EQ11, EQ13, EQ14, EQ16, EQ17,
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, A13, A14, A15,
};

/// All ids in declaration order.
const std::vector<ClosedFormId>& all_ids();

std::string_view to_string(ClosedFormId id);
std::optional<ClosedFormId> parse_id(std::string_view text);

/// One named parameter and the interval it must lie in.
struct ParamDomain {
  std::string name;
  double lo = 0.0;
  bool lo_inclusive = true;
  double hi = 0.0;  // +inf when unbounded
  bool integer = false;

  bool contains(double v) const;
  std::string describe() const;
};

/// Parameter list of an identity (empty for the constant identities).
const std::vector<ParamDomain>& param_domains(ClosedFormId id);

/// Throws DomainError naming the offending parameter and its valid range.
void check_params(ClosedFormId id, const ParamMap& params);

struct ClosedFormValue {
  double value = 0.0;
  double err = 0.0;            // nonzero only for rhs-by-quadrature
  bool by_quadrature = false;  // A2, A4, A6
  long evals = 0;
};

/// The right-hand side of `id` at `params`. `aux_tol` is the tolerance used
/// when the right-hand side is itself an integral.
ClosedFormValue closed_form(ClosedFormId id, const ParamMap& params,
                            double aux_tol = 1e-12);

/// 2π/√3, the value of ∫₀^∞ η(ix) dx.
double eta_integral();

/// √(π/t)·sinh(2√(πt/3))/cosh(√(3πt)) for t >= 0 (t = 0 gives 2π/√3).
double laplace_eta(double t);

/// ∫₀^∞ x^{−s} η(ix) dx for s > 0:
///   8√3π/(16^s (3π)^s) · Γ(2s−1)/Γ(s) · Z(2s−1)
/// with Z the four-term Hurwitz combination. At s = 1/2 the Γ pole meets
/// Z(0) = 0 and the limit Γ(w)Z(w) → Z'(0) is used.
double mellin_eta(double s);

/// The stated cosine/sine transform formulas,
///   √(π/2y)·(sinh u ± sin u)/(cosh u + cos u),  u = √(8πy/3),
/// with their y → 0 limits (2π/√3 and 0).
double fourier_cos_eta(double y);
double fourier_sin_eta(double y);

/// sech √(πy), y >= 0.
double laplace_eta3(double y);

}  // namespace etaint::closed_forms

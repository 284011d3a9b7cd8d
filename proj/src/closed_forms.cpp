#include "etaint/closed_forms.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "etaint/error.hpp"
#include "etaint/quad.hpp"
#include "etaint/specfun.hpp"

namespace etaint::closed_forms {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct IdInfo {
  ClosedFormId id;
  std::string_view name;
  std::vector<ParamDomain> domains;
};

ParamDomain nonneg(std::string name, double hi = kInf) {
  return {std::move(name), 0.0, true, hi, false};
}
ParamDomain positive(std::string name) { return {std::move(name), 0.0, false, kInf, false}; }

const std::vector<IdInfo>& table() {
  using enum ClosedFormId;
  static const std::vector<IdInfo> t = {
      {EQ5, "EQ5", {positive("t")}},
      {EQ7, "EQ7", {positive("s")}},
      {EQ8, "EQ8", {nonneg("y", quad::kMaxFrequency)}},
      {EQ9, "EQ9", {}},
      {EQ10, "EQ10", {nonneg("y", quad::kMaxFrequency)}},
      {EQ11, "EQ11", {}},
      {EQ13, "EQ13", {nonneg("z")}},
      {EQ14, "EQ14", {nonneg("y")}},
      {EQ16, "EQ16", {}},
      {EQ17, "EQ17", {}},
      {A1, "A1", {nonneg("y")}},
      {A2, "A2", {nonneg("a")}},
      {A3, "A3", {positive("nu")}},
      {A4, "A4", {nonneg("a")}},
      {A5, "A5", {nonneg("a")}},
      {A6, "A6", {nonneg("y")}},
      {A7, "A7", {}},
      {A8, "A8", {positive("a")}},
      {A9, "A9", {positive("b")}},
      {A10, "A10", {positive("a")}},
      {A11, "A11", {nonneg("y", quad::kMaxFrequency)}},
      {A12, "A12", {nonneg("y", quad::kMaxFrequency)}},
      {A13, "A13", {}},
      {A14, "A14", {}},
      {A15, "A15", {{"n", 0.0, true, 170.0, true}}},
  };
  return t;
}

const IdInfo& info(ClosedFormId id) { return table().at(static_cast<std::size_t>(id)); }

// sinh(a)/cosh(b) for a, b >= 0 without overflow.
double sinh_over_cosh(double a, double b) {
  if (b < 20.0) return std::sinh(a) / std::cosh(b);
  return std::exp(a - b) * -std::expm1(-2.0 * a) / (1.0 + std::exp(-2.0 * b));
}

// (sinh u ± sin u)/(cosh u + cos u), u >= 0.
double hyperbolic_trig_ratio(double u, int sign) {
  if (u < 1.0 && sign < 0) {
    // (sinh u − sin u)/2 = Σ u^{4k+3}/(4k+3)!, (cosh u + cos u)/2 = Σ u^{4k}/(4k)!
    const double u4 = u * u * u * u;
    double nt = u * u * u / 6.0;
    double dt = 1.0;
    double num = nt;
    double den = dt;
    for (int k = 1; k < 8; ++k) {
      nt *= u4 / ((4.0 * k) * (4.0 * k + 1) * (4.0 * k + 2) * (4.0 * k + 3));
      dt *= u4 / ((4.0 * k - 3) * (4.0 * k - 2) * (4.0 * k - 1) * (4.0 * k));
      num += nt;
      den += dt;
    }
    return num / den;
  }
  if (u < 20.0) {
    return (std::sinh(u) + sign * std::sin(u)) / (std::cosh(u) + std::cos(u));
  }
  const double e = std::exp(-u);
  return (1.0 - e * e + 2.0 * sign * std::sin(u) * e) /
         (1.0 + e * e + 2.0 * std::cos(u) * e);
}

double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

double require_nonneg(double v, const char* fn) {
  require_finite(v, fn);
  if (v < 0.0) throw DomainError(std::string(fn) + ": argument must be >= 0");
  return v;
}

// Γ(w) for w > −1, w != 0.
double gamma_shifted(double w) {
  return w > 0.0 ? specfun::gamma(w) : specfun::gamma(w + 1.0) / w;
}

// A8: 2 cos c cosh c/(cos 2c + cosh 2c), c = √(πa/2).
double a8(double a) {
  const double c = std::sqrt(kPi * a / 2.0);
  if (c < 20.0) {
    return 2.0 * std::cos(c) * std::cosh(c) / (std::cos(2.0 * c) + std::cosh(2.0 * c));
  }
  const double e = std::exp(-c);
  return 2.0 * std::cos(c) * (e + e * e * e) /
         (2.0 * std::cos(2.0 * c) * e * e + 1.0 + e * e * e * e);
}

// A11/A12: {cosh v cos v, sinh v sin v}/(sinh² v + cos² v), v = √(πy/2).
double a11_a12(double y, bool cosine) {
  const double v = std::sqrt(kPi * y / 2.0);
  if (v < 20.0) {
    const double sh = std::sinh(v);
    const double c = std::cos(v);
    const double num = cosine ? std::cosh(v) * c : sh * std::sin(v);
    return num / (sh * sh + c * c);
  }
  // Divide through by e^{2v}/4.
  const double e = std::exp(-v);
  const double e2 = e * e;
  const double c = std::cos(v);
  const double num = cosine ? 2.0 * e * (1.0 + e2) * c : 2.0 * e * (1.0 - e2) * std::sin(v);
  const double den = (1.0 - e2) * (1.0 - e2) + 4.0 * e2 * c * c;
  return num / den;
}

}  // namespace

const std::vector<ClosedFormId>& all_ids() {
  static const std::vector<ClosedFormId> ids = [] {
    std::vector<ClosedFormId> v;
    for (const auto& i : table()) v.push_back(i.id);
    return v;
  }();
  return ids;
}

std::string_view to_string(ClosedFormId id) { return info(id).name; }

std::optional<ClosedFormId> parse_id(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& i : table()) {
    if (i.name == upper) return i.id;
  }
  return std::nullopt;
}

bool ParamDomain::contains(double v) const {
  if (!std::isfinite(v)) return false;
  if (lo_inclusive ? v < lo : v <= lo) return false;
  if (v > hi) return false;
  if (integer && v != std::floor(v)) return false;
  return true;
}

std::string ParamDomain::describe() const {
  std::ostringstream os;
  os << name << (integer ? " integer" : "") << " in " << (lo_inclusive ? '[' : '(') << lo
     << ", ";
  if (std::isinf(hi)) {
    os << "inf)";
  } else {
    os << hi << ']';
  }
  return os.str();
}

const std::vector<ParamDomain>& param_domains(ClosedFormId id) { return info(id).domains; }

void check_params(ClosedFormId id, const ParamMap& params) {
  const auto& domains = param_domains(id);
  for (const auto& [name, value] : params) {
    bool known = false;
    for (const auto& d : domains) known = known || d.name == name;
    if (!known) {
      throw DomainError(std::string(to_string(id)) + ": unknown parameter '" + name + "'");
    }
  }
  for (const auto& d : domains) {
    const auto it = params.find(d.name);
    if (it == params.end()) {
      throw DomainError(std::string(to_string(id)) + ": missing parameter; expected " +
                        d.describe());
    }
    if (!d.contains(it->second)) {
      std::ostringstream os;
      os << to_string(id) << ": " << d.name << "=" << it->second
         << " outside domain; expected " << d.describe();
      throw DomainError(os.str());
    }
  }
}

double eta_integral() { return 2.0 * kPi / std::sqrt(3.0); }

double laplace_eta(double t) {
  require_nonneg(t, "laplace_eta");
  if (t == 0.0) return eta_integral();
  return std::sqrt(kPi / t) *
         sinh_over_cosh(2.0 * std::sqrt(kPi * t / 3.0), std::sqrt(3.0 * kPi * t));
}

double mellin_eta(double s) {
  require_finite(s, "mellin_eta");
  if (!(s > 0.0)) throw DomainError("mellin_eta: s must be > 0");
  const double w = 2.0 * s - 1.0;
  const double prefactor =
      8.0 * std::sqrt(3.0) * kPi * std::pow(16.0, -s) * std::pow(3.0 * kPi, -s);
  double gamma_times_z = 0.0;
  if (w == 0.0) {
    // Γ(w) ~ 1/w and Z(w) ~ Z'(0)·w.
    gamma_times_z = specfun::hurwitz_zeta_combo_slope_at_zero();
  } else {
    gamma_times_z = gamma_shifted(w) * specfun::hurwitz_zeta_combo(w);
  }
  return prefactor * gamma_times_z / specfun::gamma(s);
}

double fourier_cos_eta(double y) {
  require_nonneg(y, "fourier_cos_eta");
  if (y == 0.0) return eta_integral();
  const double u = std::sqrt(8.0 * kPi * y / 3.0);
  return std::sqrt(kPi / (2.0 * y)) * hyperbolic_trig_ratio(u, +1);
}

double fourier_sin_eta(double y) {
  require_nonneg(y, "fourier_sin_eta");
  if (y == 0.0) return 0.0;
  const double u = std::sqrt(8.0 * kPi * y / 3.0);
  return std::sqrt(kPi / (2.0 * y)) * hyperbolic_trig_ratio(u, -1);
}

double laplace_eta3(double y) {
  require_nonneg(y, "laplace_eta3");
  return sech(std::sqrt(kPi * y));
}

ClosedFormValue closed_form(ClosedFormId id, const ParamMap& params, double aux_tol) {
  check_params(id, params);
  const auto p = [&](const char* name) { return params.at(name); };
  const auto by_quad = [&](quad::AuxRhs which, double v) {
    const quad::QuadResult r = quad::integrate_rhs_aux(which, v, aux_tol);
    return ClosedFormValue{r.value, r.err_est, true, r.evals};
  };
  const auto exact = [](double v) { return ClosedFormValue{v, 0.0, false, 0}; };

  using enum ClosedFormId;
  switch (id) {
    case EQ5: return exact(laplace_eta(p("t")));
    case EQ7: return exact(mellin_eta(p("s")));
    case EQ8: return exact(fourier_cos_eta(p("y")));
    case EQ9:
    case A13: return exact(eta_integral());
    case EQ10: return exact(fourier_sin_eta(p("y")));
    case EQ11: return exact(kPi / 4.0);
    case EQ13: return exact(2.0 * kPi / std::cosh(kPi * std::sqrt(2.0 * p("z"))));
    case EQ14:
    case A1: return exact(laplace_eta3(p("y")));
    case EQ16:
    case A7: return exact(std::numbers::sqrt2 - 1.0);
    case EQ17: return exact(kPi / 8.0);
    case A2: return by_quad(quad::AuxRhs::A2, p("a"));
    case A3: {
      const double nu = p("nu");
      return exact(4.0 * std::pow(kPi, -nu) *
                   std::exp(specfun::log_gamma(2.0 * nu) - specfun::log_gamma(nu)) *
                   specfun::dirichlet_beta(2.0 * nu));
    }
    case A4: return by_quad(quad::AuxRhs::A4, p("a"));
    case A5: return exact(sech(std::sqrt(kPi * p("a"))));
    case A6: return by_quad(quad::AuxRhs::A6, p("y"));
    case A8: return exact(a8(p("a")));
    case A9:
      return exact(4.0 / kPi * std::atan(std::tanh(0.5 * std::sqrt(kPi * p("b")))));
    case A10: {
      const double a = p("a");
      const double c = 0.5 * std::sqrt(a / kPi);
      return exact((specfun::digamma(c + 0.75) - specfun::digamma(c + 0.25)) /
                   (kPi * std::sqrt(a)));
    }
    case A11: return exact(a11_a12(p("y"), true));
    case A12: return exact(a11_a12(p("y"), false));
    case A14: return exact(1.0);
    case A15: {
      const double n = p("n");
      // 4·n!/π^{n+1}·β(2n+1), prefactor as stated.
      return exact(4.0 * std::exp(specfun::log_gamma(n + 1.0)) * std::pow(kPi, -(n + 1.0)) *
                   specfun::dirichlet_beta(2.0 * n + 1.0));
    }
  }
  throw DomainError("closed_form: unknown id");
}

}  // namespace etaint::closed_forms

#include <numbers>

#include "etaint/verify.hpp"

namespace etaint::verify {
namespace {

using quad::Glaisher;
using quad::KernelSpec;

constexpr double kConstTol = 1e-10;
constexpr double kParamTol = 1e-9;

std::vector<ParamMap> grid(const std::string& name, std::initializer_list<double> values) {
  std::vector<ParamMap> g;
  for (double v : values) g.push_back({{name, v}});
  return g;
}

const std::vector<ParamMap> kNoParams = {ParamMap{}};

IdentitySpec constant(ClosedFormId id, std::function<Lhs(const ParamMap&)> lhs,
                      std::string formula) {
  return {id, std::move(lhs), kNoParams, kConstTol, ExpectedStatus::pass, "",
          std::move(formula)};
}

IdentitySpec parametric(ClosedFormId id, std::function<Lhs(const ParamMap&)> lhs,
                        std::vector<ParamMap> g, std::string formula) {
  return {id, std::move(lhs), std::move(g), kParamTol, ExpectedStatus::pass, "",
          std::move(formula)};
}

IdentitySpec flagged(IdentitySpec spec, std::string notes) {
  spec.expected_status = ExpectedStatus::flagged;
  spec.notes = std::move(notes);
  return spec;
}

}  // namespace

std::vector<IdentitySpec> default_registry() {
  using enum ClosedFormId;
  constexpr double pi = std::numbers::pi;
  std::vector<IdentitySpec> r;

  r.push_back(parametric(
      EQ5, [](const ParamMap& p) { return KernelSpec::exp(param(p, "t"), 1); },
      grid("t", {0.1, 1.0, 3.0 * pi, 10.0}),
      "int_0^inf e^{-xt} eta(ix) dx = sqrt(pi/t) sinh(2 sqrt(pi t/3)) / cosh(sqrt(3 pi t))"));

  r.push_back(parametric(
      EQ7, [](const ParamMap& p) { return KernelSpec::power(param(p, "s"), 1); },
      grid("s", {0.25, 0.5, 0.75, 1.0, 1.5, 2.0}),
      "int_0^inf x^{-s} eta(ix) dx = 8 sqrt(3) pi / (16^s (3 pi)^s) Gamma(2s-1)/Gamma(s) "
      "[zeta(2s-1,1/12) + zeta(2s-1,11/12) - zeta(2s-1,5/12) - zeta(2s-1,7/12)], s > 0"));

  r.push_back(flagged(
      parametric(EQ8, [](const ParamMap& p) { return KernelSpec::cos(param(p, "y"), 1); },
                 grid("y", {0.5, 1.0, 5.0, 20.0}),
                 "int_0^inf cos(xy) eta(ix) dx = sqrt(pi/(2y)) (sinh u + sin u)/(cosh u + cos u), "
                 "u = sqrt(8 pi y/3)"),
      "stated closed form disagrees with the integral for every y > 0 (it is correct only in "
      "the y -> 0 limit); Re of the Laplace transform continued to t = iy does agree"));

  r.push_back(constant(
      EQ9, [](const ParamMap&) { return KernelSpec::exp(0.0, 1); },
      "int_0^inf eta(ix) dx = 2 pi / sqrt(3)  [y -> 0 limit of the cosine transform]"));

  r.push_back(flagged(
      parametric(EQ10, [](const ParamMap& p) { return KernelSpec::sin(param(p, "y"), 1); },
                 grid("y", {0.5, 1.0, 5.0, 20.0}),
                 "int_0^inf sin(xy) eta(ix) dx = sqrt(pi/(2y)) (sinh u - sin u)/(cosh u + cos u), "
                 "u = sqrt(8 pi y/3)"),
      "stated closed form disagrees with the integral for every y > 0; -Im of the Laplace "
      "transform continued to t = iy does agree"));

  r.push_back(constant(
      EQ11, [](const ParamMap&) { return Glaisher::eq11; },
      "int_0^inf (sinh x - sin x) / (x^2 (cosh x + cos x)) dx = pi/4"));

  r.push_back(parametric(
      EQ13,
      [](const ParamMap& p) {
        return KernelSpec::exp(2.0 * std::numbers::pi * param(p, "z"), 3)
            .scaled(2.0 * std::numbers::pi);
      },
      grid("z", {0.1, 0.5, 1.0, 2.0}),
      "int_0^1 q^{z-1} eta^3 dq = 2 pi / cosh(pi sqrt(2z)), checked as "
      "int_0^inf 2 pi e^{-2 pi z x} eta^3(ix) dx with q = e^{-2 pi x}"));

  r.push_back(parametric(
      EQ14, [](const ParamMap& p) { return KernelSpec::exp(param(p, "y"), 3); },
      grid("y", {0.0, 0.5, 1.0, pi, 4.0}),
      "int_0^inf e^{-xy} eta^3(ix) dx = sech sqrt(pi y)  [from the q-integral of eta^3]"));

  {
    IdentitySpec s = constant(
        EQ16, [](const ParamMap&) { return KernelSpec::sqrt_shift(3); },
        "int_0^inf sqrt((sqrt(x^2+1)-1)/(x^2+1)) e^{-pi x/4} prod_{n>=1} (1-e^{-2 pi n x})^3 dx "
        "= sqrt(2) - 1");
    s.notes =
        "the product is written starting at n = 0, which makes the integrand vanish; read as "
        "n = 1, i.e. the integrand is the A7 kernel times eta^3(ix)";
    r.push_back(std::move(s));
  }

  r.push_back(constant(
      EQ17, [](const ParamMap&) { return Glaisher::eq17; },
      "int_0^inf sinh(x/2) sin(x/2) / (x (cosh x + cos x)) dx = pi/8"));

  r.push_back(parametric(
      A1, [](const ParamMap& p) { return KernelSpec::exp(param(p, "y"), 3); },
      grid("y", {0.0, 0.5, 1.0, pi, 4.0}),
      "A1: int_0^inf e^{-xy} eta^3(ix) dx = sech sqrt(pi y)"));

  {
    IdentitySpec s = parametric(
        A2, [](const ParamMap& p) { return KernelSpec::shifted_recip(param(p, "a"), 1.0, 3); },
        grid("a", {0.5, 1.0, 4.0}),
        "A2: int_0^inf eta^3(ix)/(x+a) dx = (2/pi) int_0^inf x e^{-a x^2/pi} / cosh x dx");
    s.notes = "right-hand side is an integral (rhs-by-quadrature, weaker evidence)";
    r.push_back(std::move(s));
  }

  r.push_back(parametric(
      A3, [](const ParamMap& p) { return KernelSpec::power(param(p, "nu"), 3); },
      grid("nu", {0.5, 1.0, 1.5, 3.0}),
      "A3: int_0^inf x^{-nu} eta^3(ix) dx = 4 pi^{-nu} Gamma(2nu)/Gamma(nu) beta(2nu), nu > 0"));

  {
    IdentitySpec s = parametric(
        A4, [](const ParamMap& p) { return KernelSpec::shifted_recip(param(p, "a"), 0.5, 3); },
        grid("a", {0.5, 1.0, 4.0}),
        "A4: int_0^inf eta^3(ix)/sqrt(x+a) dx = (2/pi) int_0^inf e^{-a x^2/pi} / cosh x dx");
    s.notes = "right-hand side is an integral (rhs-by-quadrature, weaker evidence)";
    r.push_back(std::move(s));
  }

  r.push_back(parametric(
      A5, [](const ParamMap& p) { return KernelSpec::exp_recip(param(p, "a"), 3); },
      grid("a", {0.25, 1.0, 4.0}),
      "A5: int_0^inf x^{-1/2} e^{-a/x} eta^3(ix) dx = sech sqrt(pi a)"));

  {
    IdentitySpec s = parametric(
        A6, [](const ParamMap& p) { return KernelSpec::exp_over_x(param(p, "y"), 3); },
        grid("y", {0.0, 0.5, 1.0, 4.0}),
        "A6: int_0^inf e^{-xy} eta^3(ix) dx/x = (2/pi) int_{sqrt(pi y)}^inf x sech x dx");
    s.notes = "right-hand side is an integral (rhs-by-quadrature, weaker evidence)";
    r.push_back(std::move(s));
  }

  r.push_back(constant(
      A7, [](const ParamMap&) { return KernelSpec::sqrt_shift(3); },
      "A7: int_0^inf sqrt((sqrt(x^2+1)-1)/(x^2+1)) eta^3(ix) dx = sqrt(2) - 1"));

  r.push_back(parametric(
      A8, [](const ParamMap& p) { return KernelSpec::cos_recip(param(p, "a"), 3); },
      grid("a", {0.25, 1.0, 4.0}),
      "A8: int_0^inf x^{-1/2} cos(a/x) eta^3(ix) dx = "
      "2 cos sqrt(pi a/2) cosh sqrt(pi a/2) / (cos sqrt(2 pi a) + cosh sqrt(2 pi a))"));

  r.push_back(parametric(
      A9, [](const ParamMap& p) { return KernelSpec::erf_weight(param(p, "b"), 3); },
      grid("b", {0.25, 1.0, 4.0}),
      "A9: int_0^inf x^{-1/2} erf(sqrt(bx)) eta^3(ix) dx = (4/pi) arctan(tanh(sqrt(pi b)/2))"));

  r.push_back(flagged(
      parametric(
          A10, [](const ParamMap& p) { return KernelSpec::scaled_erfc_recip(param(p, "a"), 3); },
          grid("a", {0.25, 1.0, 4.0}),
          "A10: int_0^inf x^{-1/2} e^{a/x} erfc(sqrt(a/x)) eta^3(ix) dx = "
          "(1/(pi sqrt a)) [psi(sqrt(a/pi)/2 + 3/4) - psi(sqrt(a/pi)/2 + 1/4)]"),
      "stated right-hand side fails both asymptotic checks (a -> 0: lhs -> 1, rhs ~ 1/sqrt(a); "
      "a -> inf: lhs ~ (pi a)^{-1/2}, rhs ~ 1/(a sqrt(pi))); reported, not repaired"));

  r.push_back(parametric(
      A11, [](const ParamMap& p) { return KernelSpec::cos(param(p, "y"), 3); },
      grid("y", {0.5, 1.0, 5.0, 20.0}),
      "A11: int_0^inf cos(xy) eta^3(ix) dx = cosh v cos v / (sinh^2 v + cos^2 v), "
      "v = sqrt(pi y/2)"));

  r.push_back(parametric(
      A12, [](const ParamMap& p) { return KernelSpec::sin(param(p, "y"), 3); },
      grid("y", {0.5, 1.0, 5.0, 20.0}),
      "A12: int_0^inf sin(xy) eta^3(ix) dx = sinh v sin v / (sinh^2 v + cos^2 v), "
      "v = sqrt(pi y/2)"));

  r.push_back(constant(
      A13, [](const ParamMap&) { return KernelSpec::exp(0.0, 1); },
      "A13: int_0^inf eta(ix) dx = 2 pi / sqrt(3)"));

  r.push_back(constant(
      A14, [](const ParamMap&) { return KernelSpec::exp(0.0, 3); },
      "A14: int_0^inf eta^3(ix) dx = 1"));

  r.push_back(flagged(
      parametric(A15, [](const ParamMap& p) { return KernelSpec::power(-param(p, "n"), 3); },
                 grid("n", {0.0, 1.0, 2.0, 3.0}),
                 "A15: int_0^inf x^n eta^3(ix) dx = 4 n! / pi^{n+1} beta(2n+1)"),
      "stated prefactor 4 n! is correct only at n = 0; integrating the eta^3 series term by "
      "term gives 4^{n+1} n! / pi^{n+1} beta(2n+1)"));

  return r;
}

const IdentitySpec* find(const std::vector<IdentitySpec>& registry, ClosedFormId id) {
  for (const auto& s : registry) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

}  // namespace etaint::verify

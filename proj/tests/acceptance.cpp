// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "etaint/cli.hpp"
#include "etaint/closed_forms.hpp"
#include "etaint/eta.hpp"
#include "etaint/specfun.hpp"
#include "etaint/verify.hpp"

namespace {

using namespace etaint;
using closed_forms::ClosedFormId;
using verify::Status;
constexpr double pi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rhs(ClosedFormId id, const ParamMap& p = {}) { return closed_forms::closed_form(id, p).value; }

const std::vector<verify::IdentitySpec>& registry() {
  static const auto r = verify::default_registry();
  return r;
}

Outcome constants() {
  Outcome o;
  for (auto id : {ClosedFormId::EQ9, ClosedFormId::A13, ClosedFormId::A14, ClosedFormId::EQ11,
                  ClosedFormId::EQ17, ClosedFormId::A7}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = verify::verify_identity(*verify::find(registry(), id), {}, 1e-10);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string name(closed_forms::to_string(id));
    o.require(r.status == Status::pass && r.abs_residual <= 1e-10,
              name + " residual " + fmt("%.2e", r.abs_residual));
    o.require(s < 2.0, name + " took " + fmt("%.2f s", s));
  }
  o.require(rhs(ClosedFormId::EQ9) == 2.0 * pi / std::sqrt(3.0), "EQ9 constant");
  o.require(rhs(ClosedFormId::A14) == 1.0, "A14 constant");
  o.require(rhs(ClosedFormId::EQ11) == pi / 4.0, "EQ11 constant");
  o.require(rhs(ClosedFormId::EQ17) == pi / 8.0, "EQ17 constant");
  o.require(rhs(ClosedFormId::A7) == std::numbers::sqrt2 - 1.0, "A7 constant");
  return o;
}

Outcome parametric() {
  Outcome o;
  const std::set<ClosedFormId> ids = {
      ClosedFormId::EQ5,  ClosedFormId::EQ7, ClosedFormId::EQ8, ClosedFormId::EQ10,
      ClosedFormId::EQ13, ClosedFormId::EQ14, ClosedFormId::A1, ClosedFormId::A2,
      ClosedFormId::A3,   ClosedFormId::A4,  ClosedFormId::A5,  ClosedFormId::A6,
      ClosedFormId::A8,   ClosedFormId::A9,  ClosedFormId::A11, ClosedFormId::A12,
      ClosedFormId::A15};
  std::vector<verify::IdentitySpec> selected;
  for (const auto& s : registry()) {
    if (ids.contains(s.id)) selected.push_back(s);
  }
  const auto report = verify::run_suite(selected, 1e-9);
  int passed = 0;
  for (const auto& r : report.records) {
    if (r.status == Status::pass) {
      ++passed;
    } else {
      o.require(false, r.id + "(" + format_params(r.params) + ") " +
                           std::string(verify::to_string(r.status)) + " residual " +
                           fmt("%.3e", r.abs_residual));
    }
  }
  const auto has = [&](const char* id, double s) {
    for (const auto& r : report.records) {
      if (r.id == id && r.params.begin()->second == s) return r.status == Status::pass;
    }
    return false;
  };
  o.require(has("EQ7", 0.5) && has("EQ7", 1.0), "EQ7 limit paths s = 1/2, s = 1");
  o.require(passed >= 60, std::to_string(passed) + " of " +
                              std::to_string(report.records.size()) + " records pass (need 60)");
  o.require(report.suite.totals.total_ms < 60000.0,
            "suite wall time " + fmt("%.0f ms", report.suite.totals.total_ms));
  return o;
}

Outcome a10_flagged() {
  Outcome o;
  const auto& spec = *verify::find(registry(), ClosedFormId::A10);
  for (const auto& p : spec.param_grid) {
    const auto r = verify::verify_identity(spec, p);
    o.require(r.status == Status::flagged, "A10(" + format_params(p) + ") not flagged");
    o.require(r.abs_residual > 0.0 && std::isfinite(r.abs_residual),
              "A10(" + format_params(p) + ") residual " + fmt("%.3e", r.abs_residual));
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli({"run", "--all"}, out, err);
  o.require(code == 0, "run --all exited " + std::to_string(code));
  return o;
}

Outcome limit_web() {
  Outcome o;
  const auto close = [&](double a, double b, double tol, const std::string& what) {
    o.require(std::abs(a - b) <= tol, what + ": |diff| = " + fmt("%.3e", std::abs(a - b)));
  };
  const double four_beta2 = 4.0 * specfun::dirichlet_beta(2.0) / pi;
  close(rhs(ClosedFormId::A15, {{"n", 0.0}}), rhs(ClosedFormId::A14), 1e-10, "A15(n=0) = A14");
  close(rhs(ClosedFormId::A3, {{"nu", 0.5}}), 1.0, 1e-10, "A3(nu=1/2) = 1");
  close(rhs(ClosedFormId::A3, {{"nu", 1.0}}), four_beta2, 1e-10, "A3(nu=1) = 4 beta(2)/pi");
  close(rhs(ClosedFormId::A6, {{"y", 0.0}}), four_beta2, 1e-10, "A6 rhs(y=0) = 4 beta(2)/pi");
  close(rhs(ClosedFormId::EQ8, {{"y", 0.0}}), rhs(ClosedFormId::EQ9), 1e-10, "EQ8(y=0) = EQ9");
  close(closed_forms::laplace_eta(0.0), rhs(ClosedFormId::EQ9), 1e-10, "EQ5(t->0) = EQ9");
  close(rhs(ClosedFormId::A9, {{"b", 50.0}}), 1.0, 1e-8, "A9(b=50) within 1e-8 of 1");
  close(rhs(ClosedFormId::A11, {{"y", 0.0}}), 1.0, 1e-10, "A11(y=0) = 1");
  return o;
}

// q^{1/24} ∏ (1 − q^k), written out independently of the library.
double product_oracle(double x) {
  const double q = std::exp(-2.0 * pi * x);
  double prod = std::exp(-pi * x / 12.0);
  double qk = q;
  for (int k = 1; k <= 200; ++k) {
    prod *= 1.0 - qk;
    qk *= q;
  }
  return prod;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double series = eta::eta(x, 1e-15).value;
    const double prod = product_oracle(x);
    o.require(std::abs(series - prod) <= 1e-13,
              "eta(" + fmt("%g", x) + ") series vs product " + fmt("%.2e", std::abs(series - prod)));
    const double cube = eta::eta_cubed(x, 1e-15).value;
    o.require(std::abs(cube - series * series * series) <= 1e-12,
              "eta^3(" + fmt("%g", x) + ") vs cube");
  }
  return o;
}

Outcome calibration() {
  Outcome o;
  const auto report = verify::run_suite(registry());
  int checked = 0;
  for (const auto& r : report.records) {
    if (r.status != Status::pass) continue;
    ++checked;
    o.require(r.abs_residual <= 10.0 * r.lhs_err,
              r.id + "(" + format_params(r.params) + ") residual " + fmt("%.3e", r.abs_residual) +
                  " > 10 x " + fmt("%.3e", r.lhs_err));
  }
  o.require(checked > 0, "no passing records");
  return o;
}

Outcome transform_pairs() {
  Outcome o;
  using quad::LaplacePair;
  const std::pair<LaplacePair, ClosedFormId> cases[] = {
      {LaplacePair::exp_shift, ClosedFormId::A2},
      {LaplacePair::exp_shift_sqrt, ClosedFormId::A4},
      {LaplacePair::sine, ClosedFormId::A7},
  };
  for (const auto& [pair, id] : cases) {
    const auto r = verify::transform_pair_check(pair, 3, 1.0, 1e-9);
    const std::string name(quad::to_string(pair));
    o.require(r.reproduces == id, name + " does not map to " + std::string(closed_forms::to_string(id)));
    o.require(r.status == Status::pass, name + " status " + std::string(verify::to_string(r.status)));
    o.require(std::abs(r.factor * r.F_side - r.target) <= 1e-9,
              name + " t-side vs target " + fmt("%.3e", std::abs(r.factor * r.F_side - r.target)));
  }
  return o;
}

Outcome special_functions() {
  Outcome o;
  const double refl = specfun::digamma(0.75) - specfun::digamma(0.25);
  o.require(std::abs(refl - pi) <= 1e-12, "digamma reflection " + fmt("%.2e", std::abs(refl - pi)));
  const double z0 = specfun::hurwitz_zeta_combo(0.0);
  o.require(std::abs(z0) <= 1e-13, "Z(0) = " + fmt("%.2e", z0));

  // β(2) by averaging partial sums of the alternating series.
  std::vector<double> partial;
  double s = 0.0;
  for (int n = 0; n < 2040; ++n) {
    const double m = 2.0 * n + 1.0;
    s += (n % 2 == 0 ? 1.0 : -1.0) / (m * m);
    if (n >= 2000) partial.push_back(s);
  }
  while (partial.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    partial.pop_back();
  }
  o.require(std::abs(specfun::dirichlet_beta(2.0) - partial[0]) <= 1e-12, "beta(2) vs series");

  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    if (std::abs(specfun::erf(x) + specfun::erfc(x) - 1.0) > 1e-13) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " of 1000 erf/erfc points off");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"1 constant identities at tol 1e-10, each < 2 s", constants},
      {"2 parametric identities pass at tol 1e-9, >= 60 records, < 60 s", parametric},
      {"3 A10 flagged with nonzero residual, suite exits 0", a10_flagged},
      {"4 closed-form limit web to 1e-10", limit_web},
      {"5 eta series vs product 1e-13, eta^3 vs cube 1e-12", oracle_equivalence},
      {"6 |lhs - rhs| <= 10 lhs_err on passing records", calibration},
      {"7 transform pairs reproduce A2, A4, A7 to 1e-9", transform_pairs},
      {"8 special-function micro-suite", special_functions},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS  " : "FAIL  ") << c.name << '\n';
    for (const auto& n : o.notes) std::cout << "        " << n << '\n';
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria met" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}

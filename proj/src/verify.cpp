#include "etaint/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <thread>

#include "etaint/error.hpp"

namespace etaint::verify {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double pass_threshold(double tol, double err) { return std::max(tol, 10.0 * err); }

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

quad::QuadResult integrate_lhs(const Lhs& lhs, double tol) {
  return std::visit(
      [&](const auto& k) -> quad::QuadResult {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, quad::KernelSpec>) {
          return quad::integrate(k, std::max(1e-13, 0.1 * tol));
        } else {
          return quad::integrate_glaisher(k, std::max(1e-12, 0.1 * tol));
        }
      },
      lhs);
}

Record failed_record(const IdentitySpec& spec, const ParamMap& params, std::string why) {
  Record r;
  r.id = std::string(closed_forms::to_string(spec.id));
  r.params = params;
  r.lhs = r.rhs = r.abs_residual = r.rel_residual = std::nan("");
  r.status = Status::fail;
  r.diagnostic = std::move(why);
  return r;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
  }
  return "fail";
}

std::optional<Status> parse_status(std::string_view s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "flagged") return Status::flagged;
  return std::nullopt;
}

double effective_tol(const IdentitySpec& spec, std::optional<double> tol_override) {
  return tol_override.value_or(spec.tol);
}

Record verify_identity(const IdentitySpec& spec, const ParamMap& params,
                       std::optional<double> tol_override) {
  closed_forms::check_params(spec.id, params);
  const double tol = effective_tol(spec, tol_override);
  if (!(tol >= 1e-12)) throw DomainError("verify_identity: tol must be >= 1e-12");

  const auto start = Clock::now();
  Record r;
  r.id = std::string(closed_forms::to_string(spec.id));
  r.params = params;
  try {
    const quad::QuadResult lhs = integrate_lhs(spec.lhs(params), tol);
    const closed_forms::ClosedFormValue rhs =
        closed_forms::closed_form(spec.id, params, std::max(1e-13, 0.1 * tol));
    r.lhs = lhs.value;
    r.lhs_err = lhs.err_est;
    r.rhs = rhs.value;
    r.rhs_err = rhs.err;
    r.evals = lhs.evals + rhs.evals;
    r.rhs_method = rhs.by_quadrature ? "rhs-by-quadrature" : "closed-form";
  } catch (const NonConvergence& e) {
    Record f = failed_record(spec, params, e.what());
    f.ms = elapsed_ms(start);
    return f;
  }

  r.abs_residual = std::abs(r.lhs - r.rhs);
  r.rel_residual = r.rhs != 0.0 ? r.abs_residual / std::abs(r.rhs) : r.abs_residual;
  if (spec.expected_status == ExpectedStatus::flagged) {
    r.status = Status::flagged;
  } else {
    r.status = r.abs_residual <= pass_threshold(tol, r.lhs_err + r.rhs_err) ? Status::pass
                                                                            : Status::fail;
  }
  r.ms = elapsed_ms(start);
  return r;
}

Totals summarize(const std::vector<Record>& records) {
  Totals t;
  for (const auto& r : records) {
    ++t.records;
    t.total_ms += r.ms;
    switch (r.status) {
      case Status::pass:
        ++t.pass;
        t.max_pass_residual = std::max(t.max_pass_residual, r.abs_residual);
        break;
      case Status::fail: ++t.fail; break;
      case Status::flagged: ++t.flagged; break;
    }
  }
  return t;
}

VerificationReport run_suite(const std::vector<IdentitySpec>& registry,
                             std::optional<double> tol_override, int jobs) {
  struct Task {
    const IdentitySpec* spec;
    const ParamMap* params;
  };
  std::vector<Task> tasks;
  for (const auto& spec : registry) {
    for (const auto& p : spec.param_grid) tasks.push_back({&spec, &p});
  }

  VerificationReport report;
  report.suite.tol = tol_override;
  report.suite.started_at = utc_now();
  const auto start = Clock::now();

  std::vector<Record> records(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        records[i] = verify_identity(*t.spec, *t.params, tol_override);
      } catch (const std::exception& e) {
        records[i] = failed_record(*t.spec, *t.params, e.what());
      }
    }
  };

  int n = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  n = std::clamp(n, 1, std::max<int>(1, static_cast<int>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  }

  report.suite.totals = summarize(records);
  report.suite.totals.total_ms = elapsed_ms(start);
  report.records = std::move(records);
  return report;
}

TransformPairRecord transform_pair_check(quad::LaplacePair pair, int n, double a,
                                         double tol) {
  if (n != 1 && n != 3) throw DomainError("transform_pair_check: n must be 1 or 3");
  if (!(tol >= 1e-12)) throw DomainError("transform_pair_check: tol must be >= 1e-12");
  const double qtol = std::max(1e-13, 0.1 * tol);

  TransformPairRecord r;
  r.pair = pair;
  r.n = n;
  r.a = a;
  const quad::QuadResult f = quad::integrate(quad::pair_kernel(pair, a, n), qtol);
  const quad::QuadResult F = quad::integrate_pair_rhs(pair, a, n, qtol);
  r.f_side = f.value;
  r.f_err = f.err_est;
  r.F_side = F.value;
  r.F_err = F.err_est;
  r.evals = f.evals + F.evals;
  r.pair_residual = std::abs(f.value - F.value);
  bool ok = r.pair_residual <= pass_threshold(tol, f.err_est + F.err_est);

  if (n == 3) {
    double target_err = 0.0;
    double lhs_err = f.err_est;
    switch (pair) {
      case quad::LaplacePair::exp_shift:
      case quad::LaplacePair::exp_shift_sqrt: {
        r.reproduces = pair == quad::LaplacePair::exp_shift ? ClosedFormId::A2 : ClosedFormId::A4;
        const auto cf = closed_forms::closed_form(*r.reproduces, {{"a", a}}, qtol);
        r.target = cf.value;
        target_err = cf.err;
        r.evals += cf.evals;
        r.target_lhs = f.value;
        break;
      }
      case quad::LaplacePair::sine:
        if (a == 1.0) {
          r.reproduces = ClosedFormId::A7;
          r.factor = std::numbers::sqrt2;
          r.target = closed_forms::closed_form(ClosedFormId::A7, {}).value;
          const quad::QuadResult direct = quad::integrate(quad::KernelSpec::sqrt_shift(3), qtol);
          r.target_lhs = direct.value;
          lhs_err = direct.err_est;
          r.evals += direct.evals;
        }
        break;
    }
    if (r.reproduces) {
      r.target_residual =
          std::max(std::abs(r.factor * r.F_side - r.target), std::abs(r.target_lhs - r.target));
      const double slack = std::max(r.factor * F.err_est, lhs_err) + target_err;
      ok = ok && r.target_residual <= pass_threshold(tol, slack);
    }
  }
  r.status = ok ? Status::pass : Status::fail;
  return r;
}

}  // namespace etaint::verify

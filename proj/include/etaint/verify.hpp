#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "etaint/closed_forms.hpp"
#include "etaint/params.hpp"
#include "etaint/quad.hpp"

namespace etaint::verify {

using closed_forms::ClosedFormId;

enum class ExpectedStatus { pass, flagged };
enum class Status { pass, fail, flagged };

std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view s);

/// Left-hand integrand: an η-weighted kernel or a pure Glaisher integrand.
using Lhs = std::variant<quad::KernelSpec, quad::Glaisher>;

/// One identity: left-hand integral, closed form, and the grid it is
/// checked on.
struct IdentitySpec {
  ClosedFormId id{};
  std::function<Lhs(const ParamMap&)> lhs;
  std::vector<ParamMap> param_grid;
  double tol = 1e-10;
  ExpectedStatus expected_status = ExpectedStatus::pass;
  std::string notes;
  /// The identity written out; unique across the registry.
  std::string source_formula;
};

/// Every identity with its default grid (25 entries).
std::vector<IdentitySpec> default_registry();

/// Looks up an identity in a registry; nullptr if absent.
const IdentitySpec* find(const std::vector<IdentitySpec>& registry, ClosedFormId id);

struct Record {
  std::string id;
  ParamMap params;
  double lhs = 0.0;
  double lhs_err = 0.0;
  double rhs = 0.0;
  double rhs_err = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  Status status = Status::fail;
  long evals = 0;
  double ms = 0.0;
  std::string rhs_method;  // "closed-form" or "rhs-by-quadrature"
  std::string diagnostic;  // set when the computation itself failed

  bool operator==(const Record&) const = default;
};

/// Tolerance actually used for a record: the override if given, else the
/// identity's own tol.
double effective_tol(const IdentitySpec& spec, std::optional<double> tol_override);

/// LHS by quadrature, RHS by closed form. Status is `flagged` for flagged
/// identities, otherwise `pass` iff
///   abs_residual <= max(tol, 10·(lhs_err + rhs_err)).
/// Quadrature failures become status `fail` with a diagnostic.
Record verify_identity(const IdentitySpec& spec, const ParamMap& params,
                       std::optional<double> tol_override = std::nullopt);

struct Totals {
  int pass = 0;
  int fail = 0;
  int flagged = 0;
  int records = 0;
  double max_pass_residual = 0.0;
  double total_ms = 0.0;

  bool operator==(const Totals&) const = default;
};

struct SuiteInfo {
  std::optional<double> tol;  // the override, if any
  std::string started_at;     // ISO-8601 UTC
  Totals totals;

  bool operator==(const SuiteInfo&) const = default;
};

struct VerificationReport {
  SuiteInfo suite;
  std::vector<Record> records;

  bool operator==(const VerificationReport&) const = default;
  bool all_passed() const { return suite.totals.fail == 0; }
};

/// Summary statistics over a list of records. Flagged records are excluded
/// from max_pass_residual.
Totals summarize(const std::vector<Record>& records);

/// Runs every (identity, grid point) pair, possibly on several threads. The
/// record order is registry order, then grid order, independent of
/// scheduling. `jobs` <= 0 means hardware concurrency.
VerificationReport run_suite(const std::vector<IdentitySpec>& registry,
                             std::optional<double> tol_override = std::nullopt,
                             int jobs = 0);

/// Checks the pairing ∫f·η^n dx = ∫F(t)·L_n(t) dt for a built-in Laplace
/// pair, and where the pair reproduces an appendix identity (n = 3; A2 and
/// A4 for any a, A7 via the sine pair at a = 1) also compares against it.
struct TransformPairRecord {
  quad::LaplacePair pair{};
  int n = 3;
  double a = 1.0;
  double f_side = 0.0;  // ∫ f(x) η^n(ix) dx
  double f_err = 0.0;
  double F_side = 0.0;  // ∫ F(t) L_n(t) dt
  double F_err = 0.0;
  double pair_residual = 0.0;
  std::optional<ClosedFormId> reproduces;
  /// Factor carrying F_side to the reproduced identity: 1 for A2/A4, √2 for
  /// A7 (the A7 kernel is √2·Im(1 − ix)^{−1/2}, and exchanging the order of
  /// the two transforms turns Im(1 − ix)^{−1/2} into Im(x − i)^{−1/2}).
  double factor = 1.0;
  double target = 0.0;          // right-hand side of the reproduced identity
  double target_lhs = 0.0;      // its left-hand side by direct quadrature
  double target_residual = 0.0; // max of |factor·F − target|, |target_lhs − target|
  Status status = Status::fail;
  long evals = 0;
};

TransformPairRecord transform_pair_check(quad::LaplacePair pair, int n, double a,
                                         double tol);

}  // namespace etaint::verify

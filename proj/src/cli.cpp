#include "etaint/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "etaint/error.hpp"
#include "etaint/report_io.hpp"

namespace etaint::cli {
namespace {

// Raised for any bad flag value after CLI11 has accepted the syntax.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr std::size_t kMaxRangePoints = 10000;

double parse_real(const std::string& text, const std::string& flag) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw UsageError(flag + ": '" + text + "' is not a finite number");
  }
  return v;
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("--param: expected name=value, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

const verify::IdentitySpec& lookup(const std::vector<verify::IdentitySpec>& registry,
                                   const std::string& text) {
  const auto id = closed_forms::parse_id(text);
  const verify::IdentitySpec* spec = id ? verify::find(registry, *id) : nullptr;
  if (spec == nullptr) {
    std::string known;
    for (const auto& s : registry) {
      known += known.empty() ? "" : ", ";
      known += closed_forms::to_string(s.id);
    }
    throw UsageError("--identity: unknown id '" + text + "'; known ids: " + known);
  }
  return *spec;
}

void check_point(const verify::IdentitySpec& spec, const ParamMap& p) {
  try {
    closed_forms::check_params(spec.id, p);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--param: ") + e.what());
  }
}

// Cartesian product of the per-parameter value lists, in name order.
std::vector<ParamMap> product_grid(const std::map<std::string, std::vector<double>>& axes) {
  std::vector<ParamMap> grid{ParamMap{}};
  for (const auto& [name, values] : axes) {
    std::vector<ParamMap> next;
    for (const auto& base : grid) {
      for (double v : values) {
        ParamMap p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

std::vector<ParamMap> build_grid(const verify::IdentitySpec& spec,
                                 const std::vector<std::string>& assignments, bool ranges) {
  if (assignments.empty()) return spec.param_grid;
  std::map<std::string, std::vector<double>> axes;
  for (const auto& a : assignments) {
    auto [name, value] = split_assignment(a);
    if (axes.contains(name)) throw UsageError("--param: '" + name + "' given twice");
    const auto c1 = value.find(':');
    if (c1 == std::string::npos) {
      axes[name] = {parse_real(value, "--param " + name)};
      continue;
    }
    if (!ranges) throw UsageError("--param: ranges lo:hi:step are only accepted by 'table'");
    const auto c2 = value.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw UsageError("--param " + name + ": expected lo:hi:step, got '" + value + "'");
    }
    const double lo = parse_real(value.substr(0, c1), "--param " + name);
    const double hi = parse_real(value.substr(c1 + 1, c2 - c1 - 1), "--param " + name);
    const double step = parse_real(value.substr(c2 + 1), "--param " + name);
    try {
      axes[name] = expand_range(lo, hi, step);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--param " + name + ": " + e.what());
    }
  }
  std::vector<ParamMap> grid = product_grid(axes);
  for (const auto& p : grid) check_point(spec, p);
  return grid;
}

void emit(const std::string& text, const CliConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("--output: cannot open '" + cfg.output + "' for writing");
  file << text;
  if (!file) throw UsageError("--output: write to '" + cfg.output + "' failed");
}

std::string render(const verify::VerificationReport& report, Format f) {
  switch (f) {
    case Format::json: return report_io::to_json(report);
    case Format::csv: return report_io::to_csv(report);
    case Format::text: break;
  }
  return report_io::to_text(report);
}

int execute(CliConfig cfg, const std::vector<verify::IdentitySpec>& registry,
            std::ostream& out) {
  if (cfg.command == Command::list) {
    std::vector<verify::IdentitySpec> shown;
    if (cfg.identities.empty()) {
      shown = registry;
    } else {
      for (const auto& id : cfg.identities) shown.push_back(lookup(registry, id));
    }
    emit(cfg.format == Format::json ? report_io::registry_json(shown)
                                    : report_io::registry_text(shown),
         cfg, out);
    return kExitOk;
  }

  // Read here rather than through CLI11, which silently drops an environment
  // value that fails its validator.
  if (!cfg.tol) {
    if (const char* env = std::getenv("ETAINT_TOL"); env != nullptr && *env != '\0') {
      const double tol = parse_real(env, "ETAINT_TOL");
      if (!(tol >= kMinTol && tol <= kMaxTol)) {
        throw UsageError("ETAINT_TOL: " + std::string(env) + " not in [1e-12, 1e-3]");
      }
      cfg.tol = tol;
    }
  }

  std::vector<verify::IdentitySpec> selected;
  switch (cfg.command) {
    case Command::run:
      if (cfg.all == !cfg.identities.empty()) {
        throw UsageError("run: give exactly one of --all or --identity");
      }
      if (cfg.all) {
        selected = registry;
      } else {
        for (const auto& id : cfg.identities) selected.push_back(lookup(registry, id));
      }
      break;
    case Command::eval:
    case Command::table: {
      if (cfg.identities.size() != 1) {
        throw UsageError("--identity: exactly one identity id is required");
      }
      verify::IdentitySpec spec = lookup(registry, cfg.identities.front());
      spec.param_grid = build_grid(spec, cfg.params, cfg.command == Command::table);
      selected.push_back(std::move(spec));
      break;
    }
    case Command::list: break;
  }

  const verify::VerificationReport report = verify::run_suite(selected, cfg.tol, cfg.jobs);
  emit(render(report, cfg.format), cfg, out);
  return report.all_passed() ? kExitOk : kExitFail;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  static const std::map<std::string, Format> formats = {
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  sub->add_option("--tol", cfg.tol,
                  "Absolute tolerance override, in [1e-12, 1e-3] (default: $ETAINT_TOL)")
      ->check(CLI::Range(kMinTol, kMaxTol));
  sub->add_option("--format", cfg.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--output,-o", cfg.output, "Write the output to this file");
  sub->add_option("--jobs,-j", cfg.jobs, "Worker threads (0: one per core)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

std::vector<double> expand_range(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw std::invalid_argument("range bounds must be finite");
  }
  if (!(step > 0.0)) throw std::invalid_argument("range step must be > 0");
  if (hi < lo) throw std::invalid_argument("range requires lo <= hi");
  std::vector<double> values;
  const double end = hi + 0.5 * step;
  for (std::size_t k = 0;; ++k) {
    const double v = lo + static_cast<double>(k) * step;
    if (v >= end) break;
    if (values.size() == kMaxRangePoints) {
      throw std::invalid_argument("range has more than 10000 points");
    }
    values.push_back(v);
  }
  return values;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::vector<verify::IdentitySpec>& registry) {
  CliConfig cfg;
  CLI::App app{"Numerical verification of integral identities for the Dedekind eta function",
               "etaint"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Verify identities on their default grids");
  run->add_flag("--all", cfg.all, "Every identity in the registry");
  run->add_option("--identity,-i", cfg.identities, "Identity id (repeatable)");
  add_common(run, cfg);

  CLI::App* eval = app.add_subcommand("eval", "Verify one identity at given parameters");
  eval->add_option("--identity,-i", cfg.identities, "Identity id")->required();
  eval->add_option("--param,-p", cfg.params, "Parameter assignment name=value (repeatable)");
  add_common(eval, cfg);

  CLI::App* table = app.add_subcommand("table", "Sweep one identity over a parameter range");
  table->add_option("--identity,-i", cfg.identities, "Identity id")->required();
  table->add_option("--param,-p", cfg.params, "name=lo:hi:step or name=value (repeatable)")
      ->required();
  add_common(table, cfg);

  CLI::App* list = app.add_subcommand("list", "Print the identity registry");
  list->add_option("--identity,-i", cfg.identities, "Restrict to these ids");
  add_common(list, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (run->parsed()) cfg.command = Command::run;
  if (eval->parsed()) cfg.command = Command::eval;
  if (table->parsed()) cfg.command = Command::table;
  if (list->parsed()) cfg.command = Command::list;

  try {
    return execute(cfg, registry, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, verify::default_registry());
}

}  // namespace etaint::cli

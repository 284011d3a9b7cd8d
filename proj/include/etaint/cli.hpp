#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "etaint/verify.hpp"

namespace etaint::cli {

enum class Command { run, eval, table, list };
enum class Format { text, json, csv };

struct CliConfig {
  Command command = Command::run;
  bool all = false;
  std::vector<std::string> identities;
  std::vector<std::string> params;  // "k=v" or, for table, "k=lo:hi:step"
  std::optional<double> tol;
  Format format = Format::text;
  std::string output;  // empty: write to the output stream
  int jobs = 0;
};

inline constexpr double kMinTol = 1e-12;
inline constexpr double kMaxTol = 1e-3;

/// Exit codes: 0 when every non-flagged check passes, 1 on any failure,
/// 2 on a usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// lo, lo+step, ... up to hi (a value within step/2 past hi is dropped,
/// one within step/2 below it is kept). Throws std::invalid_argument.
std::vector<double> expand_range(double lo, double hi, double step);

/// Runs the command line `args` (without the program name) against
/// `registry`. ETAINT_TOL supplies the tolerance when --tol is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::vector<verify::IdentitySpec>& registry);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaint::cli

#pragma once

#include <string>
#include <vector>

#include "etaint/verify.hpp"

// Text, JSON and CSV renderings of verification reports.

namespace etaint::report_io {

/// JSON document {suite: {tol, started_at, totals}, records: [...]}.
/// Non-finite numbers are written as null. Pretty-printed, two-space indent,
/// trailing newline.
std::string to_json(const verify::VerificationReport& report);

/// Inverse of to_json; to_json(from_json(s)) == s for any s produced by
/// to_json. Throws std::invalid_argument on malformed input.
verify::VerificationReport from_json(const std::string& text);

/// Flattened record table with a header row; params as "k=v;k=v".
std::string to_csv(const verify::VerificationReport& report);

/// Human-readable aligned table followed by a totals line.
std::string to_text(const verify::VerificationReport& report);

/// The registry: id, parameter domains, tolerance, expected status,
/// formula and notes.
std::string registry_text(const std::vector<verify::IdentitySpec>& registry);
std::string registry_json(const std::vector<verify::IdentitySpec>& registry);

/// Shortest decimal that round-trips the double.
std::string format_double(double v);

}  // namespace etaint::report_io

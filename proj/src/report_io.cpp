#include "etaint/report_io.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace etaint::report_io {
namespace {

using json = nlohmann::ordered_json;
using verify::Record;
using verify::Status;
using verify::VerificationReport;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double read_number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) throw std::invalid_argument(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

json record_json(const Record& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  json j = {
      {"id", r.id},
      {"params", params},
      {"lhs", number(r.lhs)},
      {"lhs_err", number(r.lhs_err)},
      {"rhs", number(r.rhs)},
      {"rhs_err", number(r.rhs_err)},
      {"abs_residual", number(r.abs_residual)},
      {"rel_residual", number(r.rel_residual)},
      {"status", std::string(verify::to_string(r.status))},
      {"evals", r.evals},
      {"ms", number(r.ms)},
      {"rhs_method", r.rhs_method},
  };
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

Record record_from(const json& j) {
  Record r;
  r.id = j.at("id").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) {
    r.params[k] = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  }
  r.lhs = read_number(j, "lhs");
  r.lhs_err = read_number(j, "lhs_err");
  r.rhs = read_number(j, "rhs");
  r.rhs_err = read_number(j, "rhs_err");
  r.abs_residual = read_number(j, "abs_residual");
  r.rel_residual = read_number(j, "rel_residual");
  const auto status = verify::parse_status(j.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown status '" + j.at("status").get<std::string>() + "'");
  r.status = *status;
  r.evals = j.at("evals").get<long>();
  r.ms = read_number(j, "ms");
  r.rhs_method = j.at("rhs_method").get<std::string>();
  if (j.contains("diagnostic")) r.diagnostic = j.at("diagnostic").get<std::string>();
  return r;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string short_double(double v, int digits) {
  if (!std::isfinite(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v) {
  if (!std::isfinite(v)) return "nan";
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_json(const VerificationReport& report) {
  const auto& t = report.suite.totals;
  json totals = {
      {"pass", t.pass},
      {"fail", t.fail},
      {"flagged", t.flagged},
      {"records", t.records},
      {"max_pass_residual", number(t.max_pass_residual)},
      {"total_ms", number(t.total_ms)},
  };
  json suite = {
      {"tol", report.suite.tol ? number(*report.suite.tol) : json(nullptr)},
      {"started_at", report.suite.started_at},
      {"totals", totals},
  };
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  json doc = {{"suite", suite}, {"records", records}};
  return doc.dump(2) + "\n";
}

VerificationReport from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    VerificationReport report;
    const json& suite = doc.at("suite");
    if (!suite.at("tol").is_null()) report.suite.tol = suite.at("tol").get<double>();
    report.suite.started_at = suite.at("started_at").get<std::string>();
    const json& t = suite.at("totals");
    report.suite.totals.pass = t.at("pass").get<int>();
    report.suite.totals.fail = t.at("fail").get<int>();
    report.suite.totals.flagged = t.at("flagged").get<int>();
    report.suite.totals.records = t.at("records").get<int>();
    report.suite.totals.max_pass_residual = read_number(t, "max_pass_residual");
    report.suite.totals.total_ms = read_number(t, "total_ms");
    for (const auto& r : doc.at("records")) report.records.push_back(record_from(r));
    return report;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const VerificationReport& report) {
  std::string out =
      "id,params,lhs,lhs_err,rhs,rhs_err,abs_residual,rel_residual,status,evals,ms,rhs_method,"
      "diagnostic\n";
  for (const auto& r : report.records) {
    out += csv_field(r.id) + ',' + csv_field(format_params(r.params)) + ',' +
           format_double(r.lhs) + ',' + format_double(r.lhs_err) + ',' + format_double(r.rhs) +
           ',' + format_double(r.rhs_err) + ',' + format_double(r.abs_residual) + ',' +
           format_double(r.rel_residual) + ',' + std::string(verify::to_string(r.status)) + ',' +
           std::to_string(r.evals) + ',' + format_double(r.ms) + ',' + csv_field(r.rhs_method) +
           ',' + csv_field(r.diagnostic) + '\n';
  }
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "id" << std::setw(20) << "params" << std::setw(20)
     << "lhs" << std::setw(20) << "rhs" << std::setw(10) << "|res|" << std::setw(10)
     << "lhs_err" << std::setw(9) << "status" << std::setw(8) << "evals" << "ms\n";
  for (const auto& r : report.records) {
    std::string params = format_params(r.params);
    if (params.size() > 19) params = params.substr(0, 19);
    os << std::setw(6) << r.id << std::setw(20) << params << std::setw(20)
       << short_double(r.lhs, 15) << std::setw(20) << short_double(r.rhs, 15) << std::setw(10)
       << sci(r.abs_residual) << std::setw(10) << sci(r.lhs_err) << std::setw(9)
       << verify::to_string(r.status) << std::setw(8) << r.evals << std::fixed
       << std::setprecision(1) << r.ms << std::defaultfloat;
    if (r.rhs_method == "rhs-by-quadrature") os << "  [rhs by quadrature]";
    if (!r.diagnostic.empty()) os << "  " << r.diagnostic;
    os << '\n';
  }
  const auto& t = report.suite.totals;
  os << "\n" << t.records << " records: " << t.pass << " pass, " << t.fail << " fail, "
     << t.flagged << " flagged; max residual among passes " << sci(t.max_pass_residual)
     << "; " << std::fixed << std::setprecision(1) << t.total_ms << " ms\n";
  return os.str();
}

std::string registry_text(const std::vector<verify::IdentitySpec>& registry) {
  std::ostringstream os;
  for (const auto& spec : registry) {
    os << closed_forms::to_string(spec.id) << "  tol=" << spec.tol
       << (spec.expected_status == verify::ExpectedStatus::flagged ? "  [flagged]" : "") << '\n';
    os << "  " << spec.source_formula << '\n';
    const auto& domains = closed_forms::param_domains(spec.id);
    if (!domains.empty()) {
      os << "  params:";
      for (const auto& d : domains) os << ' ' << d.describe();
      os << "\n  grid:";
      for (const auto& p : spec.param_grid) os << ' ' << format_params(p);
      os << '\n';
    }
    if (!spec.notes.empty()) os << "  note: " << spec.notes << '\n';
  }
  return os.str();
}

std::string registry_json(const std::vector<verify::IdentitySpec>& registry) {
  json out = json::array();
  for (const auto& spec : registry) {
    json domains = json::array();
    for (const auto& d : closed_forms::param_domains(spec.id)) domains.push_back(d.describe());
    json grid = json::array();
    for (const auto& p : spec.param_grid) grid.push_back(format_params(p));
    out.push_back({
        {"id", std::string(closed_forms::to_string(spec.id))},
        {"formula", spec.source_formula},
        {"params", domains},
        {"grid", grid},
        {"tol", spec.tol},
        {"expected_status",
         spec.expected_status == verify::ExpectedStatus::flagged ? "flagged" : "pass"},
        {"notes", spec.notes},
    });
  }
  return out.dump(2) + "\n";
}

}  // namespace etaint::report_io

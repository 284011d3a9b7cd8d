#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "etaint/error.hpp"
#include "etaint/params.hpp"

namespace etaint {

double require_finite(double x, std::string_view what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
  return x;
}

double param(const ParamMap& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw DomainError("missing parameter '" + name + "'");
  }
  return require_finite(it->second, name);
}

std::string format_params(const ParamMap& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    out += name;
    out += '=';
    out.append(buf, res.ptr);
  }
  return out;
}

}  // namespace etaint

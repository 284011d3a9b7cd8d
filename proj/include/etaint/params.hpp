#pragma once

#include <map>
#include <string>

namespace etaint {

/// Named real parameters of an identity (e.g. {"s", 0.5}). Ordered so that
/// iteration and serialization are deterministic.
using ParamMap = std::map<std::string, double>;

/// Looks up a required parameter; throws DomainError if missing.
double param(const ParamMap& params, const std::string& name);

/// "a=1;b=0.25" with shortest round-trip formatting.
std::string format_params(const ParamMap& params);

}  // namespace etaint

#pragma once

#include <string>

#include "json.hpp"

namespace uavplan::io {

/// Deterministic serialisation: keys sorted, two-space indent, floating
/// values with exactly six decimals (negative zero printed as zero).
std::string dump_canonical(const nlohmann::json& j);

}  // namespace uavplan::io

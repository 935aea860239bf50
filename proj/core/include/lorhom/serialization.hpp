#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "lorhom/factor.hpp"
#include "lorhom/timelike.hpp"

namespace lorhom {

using Json = nlohmann::ordered_json;

/// {"variant": "unit" | "base" | "modified", "scale", base shape fields,
/// "dips": [{"center": [x,y,z], "diameter", "depth"}]}.
Json to_json(const ConformalFactorSpec& spec);

/// Inverse of to_json. A "modified" spec may give {"pipeline": {"max_index",
/// "rule"}} instead of dips to reference the built timelike factor.
/// Throws ConfigError.
ConformalFactorSpec factor_from_json(const Json& j);

Json to_json(const TimelikeParamSet& params);
/// Throws ConfigError on missing fields or violated invariants.
TimelikeParamSet params_from_json(const Json& j);

DipRule dip_rule_from_string(const std::string& s);

/// FNV-1a 64 of the compact dump.
std::uint64_t content_hash(const Json& j);
std::string hash_hex(std::uint64_t h);

}  // namespace lorhom

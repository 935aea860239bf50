#include "lorhom/serialization.hpp"

#include <cstdio>

#include "lorhom/errors.hpp"

namespace lorhom {

namespace {

const char* variant_name(FactorVariant v) {
  switch (v) {
    case FactorVariant::Unit: return "unit";
    case FactorVariant::Base: return "base";
    case FactorVariant::Modified: return "modified";
  }
  return "unit";
}

Json point_json(const SpherePoint& p) { return Json::array({p.x(), p.y(), p.z()}); }

SpherePoint point_from(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("point must be [x, y, z]");
  return SpherePoint(Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>()));
}

template <class T>
T field(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::vector<double> doubles(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field ") + key);
  return j.at(key).get<std::vector<double>>();
}

}  // namespace

DipRule dip_rule_from_string(const std::string& s) {
  if (s == "detour-bound") return DipRule::DetourBound;
  if (s == "crossing-budget") return DipRule::CrossingBudget;
  throw ConfigError("unknown dip rule: " + s);
}

Json to_json(const ConformalFactorSpec& spec) {
  Json j;
  j["variant"] = variant_name(spec.variant());
  j["scale"] = spec.scale();
  if (spec.variant() == FactorVariant::Unit) return j;
  const BaseFactorParams& p = spec.base_params();
  j["plateau_half_width"] = p.plateau_half_width;
  j["support_half_width"] = p.support_half_width;
  j["cutoff_plateau"] = p.cutoff_plateau;
  j["cutoff_support"] = p.cutoff_support;
  j["max_index"] = p.max_index;
  if (spec.variant() == FactorVariant::Modified) {
    Json dips = Json::array();
    for (const Dip& d : spec.dips())
      dips.push_back({{"center", point_json(d.center)}, {"diameter", d.diameter}, {"depth", d.depth}});
    j["dips"] = dips;
  }
  return j;
}

ConformalFactorSpec factor_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw ConfigError("factor must be an object");
    const std::string variant = j.at("variant").get<std::string>();
    const double scale = field(j, "scale", 1.0);
    auto finish = [scale](ConformalFactorSpec s) { return scale == 1.0 ? s : s.scaled(scale); };
    if (variant == "unit") return finish(ConformalFactorSpec::unit());
    BaseFactorParams p;
    p.plateau_half_width = field(j, "plateau_half_width", p.plateau_half_width);
    p.support_half_width = field(j, "support_half_width", p.support_half_width);
    p.cutoff_plateau = field(j, "cutoff_plateau", p.cutoff_plateau);
    p.cutoff_support = field(j, "cutoff_support", p.cutoff_support);
    p.max_index = field(j, "max_index", p.max_index);
    if (variant == "base") return finish(ConformalFactorSpec::base(p));
    if (variant != "modified") throw ConfigError("unknown factor variant: " + variant);
    if (j.contains("pipeline")) {
      const Json& pl = j.at("pipeline");
      const auto rule = dip_rule_from_string(field<std::string>(pl, "rule", "detour-bound"));
      return finish(build_timelike_pipeline(field(pl, "max_index", 6), rule, p).modified);
    }
    std::vector<Dip> dips;
    for (const Json& d : j.at("dips"))
      dips.push_back({point_from(d.at("center")), d.at("diameter").get<double>(),
                      d.at("depth").get<double>()});
    return finish(ConformalFactorSpec::modified(p, std::move(dips)));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("factor: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("factor: ") + e.what());
  }
}

Json to_json(const TimelikeParamSet& s) {
  Json j;
  j["max_index"] = s.max_index;
  j["rule"] = to_string(s.rule);
  j["mu"] = s.mu;
  j["delta"] = s.delta;
  j["nu"] = s.nu;
  j["epsilon"] = s.epsilon;
  return j;
}

TimelikeParamSet params_from_json(const Json& j) {
  try {
    return make_param_set(j.at("max_index").get<int>(),
                          dip_rule_from_string(field<std::string>(j, "rule", "detour-bound")),
                          doubles(j, "mu"), doubles(j, "delta"), doubles(j, "nu"),
                          doubles(j, "epsilon"));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("params: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }
}

std::uint64_t content_hash(const Json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lorhom

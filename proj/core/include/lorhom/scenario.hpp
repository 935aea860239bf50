#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lorhom/serialization.hpp"

namespace lorhom {

/// Exit-code contract of a scenario run.
enum class Outcome { Match = 0, Inconclusive = 1, Contradiction = 2, ConfigError = 3 };

const char* to_string(Outcome o);

/// Tasks accepted in the "task" field.
const std::vector<std::string>& scenario_tasks();

struct ScenarioOverrides {
  std::optional<int> mesh_level;
  std::optional<std::uint64_t> seed;
};

struct ScenarioResult {
  Outcome outcome = Outcome::Match;
  Json report;
  /// Files written, relative to the output directory.
  std::vector<std::string> files;
};

/// Parses a JSON config file; throws ConfigError.
Json load_config(const std::filesystem::path& path);

/// Runs the task of `config` (which must equal `task` when that is
/// non-empty) and writes <name>.json plus requested CSVs into `out_dir`.
/// Config problems throw ConfigError before anything is written.
ScenarioResult run_scenario(const Json& config, const std::string& task,
                            const ScenarioOverrides& overrides,
                            const std::filesystem::path& out_dir);

}  // namespace lorhom

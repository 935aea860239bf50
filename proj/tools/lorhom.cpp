#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lorhom/errors.hpp"
#include "lorhom/scenario.hpp"

namespace {

constexpr int kConfigExit = static_cast<int>(lorhom::Outcome::ConfigError);

std::string default_out_dir() {
  if (const char* env = std::getenv("LORHOM_OUT_DIR"); env && *env) return env;
  return "lorhom-out";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lorhom: causal homotopy checks on conformal round spheres"};
  std::string task;
  std::string config_path;
  std::string out_dir;
  int mesh_level = -1;
  std::uint64_t seed = 0;

  std::string tasks;
  for (const auto& t : lorhom::scenario_tasks()) tasks += (tasks.empty() ? "" : ", ") + t;
  app.add_option("task", task, "one of: " + tasks)->required();
  app.add_option("--config", config_path, "scenario config (JSON)")->required();
  auto* level_opt = app.add_option("--mesh-level", mesh_level, "override parameters.level");
  auto* seed_opt = app.add_option("--seed", seed, "override the scenario seed");
  auto* out_opt = app.add_option("--out", out_dir, "output directory (default $LORHOM_OUT_DIR or ./lorhom-out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigExit;
  }

  try {
    lorhom::ScenarioOverrides ov;
    if (*level_opt) ov.mesh_level = mesh_level;
    if (*seed_opt) ov.seed = seed;
    const auto config = lorhom::load_config(config_path);
    const std::string dir = *out_opt ? out_dir : default_out_dir();
    const auto result = lorhom::run_scenario(config, task, ov, dir);
    for (const auto& check : result.report.at("checks"))
      std::cout << check.at("status").get<std::string>() << "  " << check.at("name").get<std::string>() << "\n";
    std::cout << task << ": " << lorhom::to_string(result.outcome) << " (" << dir << "/"
              << result.files.front() << ")\n";
    return static_cast<int>(result.outcome);
  } catch (const lorhom::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(lorhom::Outcome::Contradiction);
  }
}

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lorhom/errors.hpp"
#include "lorhom/scenario.hpp"

using namespace lorhom;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("lorhom-test-" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST(Scenario, MissingTaskIsConfigError) {
  EXPECT_THROW(run_scenario(Json{{"name", "x"}}, "", {}, scratch("missing")), ConfigError);
}

TEST(Scenario, UnknownTaskAndMismatch) {
  EXPECT_THROW(run_scenario(Json{{"task", "fly"}}, "", {}, scratch("unknown")), ConfigError);
  EXPECT_THROW(run_scenario(Json{{"task", "lengths"}}, "distance", {}, scratch("mismatch")), ConfigError);
}

TEST(Scenario, IncompatiblePlotKind) {
  const Json c = {{"task", "lengths"}, {"plots", {"factor-heatmap"}}};
  EXPECT_THROW(run_scenario(c, "", {}, scratch("plot")), ConfigError);
}

TEST(Scenario, InvalidParametersAreConfigErrors) {
  const Json c = {{"task", "distance"}, {"parameters", {{"level", 12}}}};
  EXPECT_THROW(run_scenario(c, "", {}, scratch("level")), ConfigError);
  const Json d = {{"task", "lengths"}, {"parameters", {{"meridians", {"one"}}}}};
  EXPECT_THROW(run_scenario(d, "", {}, scratch("type")), ConfigError);
}

TEST(Scenario, UnitValidationWithDeclaredExpectation) {
  const auto dir = scratch("unit");
  const auto cfg = load_config(fs::path(LORHOM_SCENARIO_DIR) / "validate-unit.json");
  const auto r = run_scenario(cfg, "validate-factor", {}, dir);
  EXPECT_EQ(r.outcome, Outcome::Match);
  EXPECT_TRUE(fs::exists(dir / "validate-unit.json"));
  EXPECT_EQ(r.report.at("exit_code"), 0);
}

TEST(Scenario, WrongExpectationIsContradiction) {
  Json cfg = load_config(fs::path(LORHOM_SCENARIO_DIR) / "validate-unit.json");
  cfg["expect"]["failing"] = Json::array();
  EXPECT_EQ(run_scenario(cfg, "", {}, scratch("contra")).outcome, Outcome::Contradiction);
}

TEST(Scenario, ReportsAreByteIdentical) {
  const Json cfg = {{"name", "lim"}, {"task", "limit-curves"}, {"parameters", {{"samples", 257}}}};
  const auto a = scratch("det-a"), b = scratch("det-b");
  run_scenario(cfg, "", {}, a);
  run_scenario(cfg, "", {}, b);
  EXPECT_EQ(slurp(a / "lim.json"), slurp(b / "lim.json"));
}

TEST(Scenario, OverridesEnterResolvedConfigAndHash) {
  const Json cfg = {{"name", "d"}, {"task", "distance"}, {"parameters", {{"level", 2}}}};
  ScenarioOverrides ov;
  ov.mesh_level = 3;
  ov.seed = 9;
  const auto r = run_scenario(cfg, "", ov, scratch("ov"));
  EXPECT_EQ(r.report.at("config").at("parameters").at("level"), 3);
  EXPECT_EQ(r.report.at("config").at("seed"), 9);
  const auto plain = run_scenario(cfg, "", {}, scratch("ov2"));
  EXPECT_NE(r.report.at("input_hash"), plain.report.at("input_hash"));
}

TEST(Scenario, HeatmapCsv) {
  const Json cfg = {{"name", "hm"},
                    {"task", "validate-factor"},
                    {"parameters", {{"polar_samples", 256}, {"azimuth_samples", 512}, {"heatmap_polar", 65}, {"heatmap_azimuth", 32}}},
                    {"plots", {"factor-heatmap"}}};
  const auto dir = scratch("hm");
  run_scenario(cfg, "", {}, dir);
  std::ifstream is(dir / "hm.factor-heatmap.csv");
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "theta,phi,omega,excess");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    std::istringstream ls(line);
    double th, ph, om;
    char c;
    ls >> th >> c >> ph >> c >> om;
    if (std::abs(th - kPi / 2) > 0.6) EXPECT_EQ(om, 1.0);
  }
  EXPECT_EQ(rows, 65 * 32);
}

TEST(Scenario, UnreachableOutput) {
  const auto file = scratch("blocker");
  std::ofstream(file) << "x";
  EXPECT_THROW(run_scenario(Json{{"task", "limit-curves"}}, "", {}, file / "sub"), ConfigError);
}

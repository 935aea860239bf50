#include <gtest/gtest.h>

#include <cmath>

#include "lorhom/errors.hpp"
#include "lorhom/level_set.hpp"
#include "lorhom/random.hpp"
#include "lorhom/sphere.hpp"

using namespace lorhom;

namespace {

ScalarGrid power_grid(int n) {
  return ScalarGrid::sample([](double s, double t) { return kPi * std::pow(t / kPi, 1.0 + s); }, n, n,
                            0.0, 1.0, 0.0, kPi, 0.0, kPi);
}

}  // namespace

TEST(LevelSet, ClosedFormLevelCurveWithinOneCell) {
  const int n = 256;
  const auto g = power_grid(n);
  const auto comp = connected_level_component(g, kPi / 2);
  ASSERT_TRUE(comp.spans());
  const double dt = kPi / n;
  auto curve = [](double s) { return kPi * std::pow(0.5, 1.0 / (1.0 + s)); };
  for (const auto& [i, j] : comp.cells) {
    const double lo = g.t_at(j) - dt;
    const double hi = g.t_at(j + 1) + dt;
    EXPECT_TRUE(curve(g.s_at(i)) >= lo || curve(g.s_at(i + 1)) >= lo);
    EXPECT_TRUE(curve(g.s_at(i)) <= hi || curve(g.s_at(i + 1)) <= hi);
  }
  for (int i = 0; i < n; ++i) {
    bool hit = false;
    for (const auto& c : comp.cells) hit = hit || c.first == i;
    EXPECT_TRUE(hit) << "column " << i;
  }
}

TEST(LevelSet, RandomPinnedGridsSpan) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    double a[4][3];
    for (auto& row : a)
      for (double& x : row) x = rng.uniform(-0.6, 0.6);
    auto f = [&](double s, double t) {
      double v = t;
      for (int k = 0; k < 4; ++k)
        v += (a[k][0] + a[k][1] * std::cos(3 * s) + a[k][2] * std::sin(5 * s)) * std::sin((k + 1) * t);
      return v;
    };
    const auto g = ScalarGrid::sample(f, 128, 128, 0.0, 1.0, 0.0, kPi, 0.0, kPi);
    EXPECT_TRUE(connected_level_component(g, kPi / 2).spans()) << trial;
  }
}

TEST(LevelSet, PinningEnforced) {
  std::vector<double> v(4, 1.0);
  EXPECT_THROW(ScalarGrid(1, 1, 0, 1, 0, 1, v, 0.0, 1.0), InvalidArgument);
}

TEST(LevelSet, LevelMustBeInterior) {
  EXPECT_THROW(connected_level_component(power_grid(16), 0.0), InvalidArgument);
  EXPECT_THROW(connected_level_component(power_grid(16), kPi), InvalidArgument);
}

TEST(LevelSet, NarrowBandIsTooCoarse) {
  const auto g = power_grid(16);
  EXPECT_THROW(connected_level_component(g, kPi / 2, 0.1 * g.max_adjacent_jump()), ResolutionTooCoarse);
}

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lorhom/errors.hpp"
#include "lorhom/mesh.hpp"
#include "lorhom/random.hpp"

using namespace lorhom;

TEST(Mesh, LevelBounds) {
  EXPECT_THROW(build_mesh(ConformalFactorSpec::unit(), 10), ResourceError);
  EXPECT_THROW(build_mesh(ConformalFactorSpec::unit(), -1), InvalidArgument);
}

TEST(Mesh, BareMeshRefinementConverges) {
  const auto u = ConformalFactorSpec::unit();
  const auto coarse = build_mesh(u, 2, MeshOptions::bare());
  Rng rng(11);
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
  for (int k = 0; k < 6; ++k) {
    const auto a = rng.below(coarse.icosphere_vertex_count());
    const auto b = rng.below(coarse.icosphere_vertex_count());
    if (a != b) pairs.emplace_back(coarse.vertex(a), coarse.vertex(b));
  }
  ASSERT_FALSE(pairs.empty());
  double worst = 0.0;
  for (int level = 2; level <= 5; ++level) {
    const auto m = build_mesh(u, level, MeshOptions::bare());
    worst = 0.0;
    for (const auto& [a, b] : pairs) {
      const double d = distance(a, b);
      const double err = mesh_distance(m, a, b) - d;
      EXPECT_GE(err, -1e-12);
      worst = std::max(worst, err / d);
    }
  }
  EXPECT_LT(worst, 0.02);
}

TEST(Mesh, PoleToPoleAlongChains) {
  const auto m = build_mesh(ConformalFactorSpec::base(), 4);
  EXPECT_NEAR(mesh_distance(m, SpherePoint::north(), SpherePoint::south()), kPi, 1e-12);
  EXPECT_GE(mesh_distance(m, SpherePoint::north(), SpherePoint::south()), kPi - 1e-12);
  EXPECT_TRUE(m.connected());
}

TEST(Mesh, DistanceIsSymmetric) {
  const auto m = build_mesh(ConformalFactorSpec::base(), 4);
  const auto a = SpherePoint::on_equator(midpoint_azimuth(1));
  const auto b = SpherePoint::from_angles(2.5, -1.0);
  EXPECT_EQ(mesh_distance(m, a, b), mesh_distance(m, b, a));
}

TEST(Mesh, BaseMeshDistancesBoundRoundDistances) {
  const auto m = build_mesh(ConformalFactorSpec::base(), 4);
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const auto a = SpherePoint::from_angles(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi));
    const auto b = SpherePoint::from_angles(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi));
    const auto va = m.vertices()[m.snap(a)];
    const auto vb = m.vertices()[m.snap(b)];
    EXPECT_GE(mesh_distance(m, va, vb), distance(va, vb) - 1e-12);
  }
}

TEST(Mesh, ReducedDistancesVanishOnRoundSphere) {
  const auto m = build_mesh(ConformalFactorSpec::unit(), 4);
  const auto r = m.reduced_distances(Pole::North);
  const auto v = m.equator_vertex(meridian_azimuth(2));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(r[*v], 0.0);
  for (double x : r) EXPECT_GE(x, 0.0);
}

TEST(Mesh, ReducedDistancesMatchSplitDistances) {
  const auto m = build_mesh(ConformalFactorSpec::base(), 4);
  const auto rn = m.reduced_distances(Pole::North);
  const auto full = m.distances_from(m.snap(SpherePoint::north()));
  for (std::uint32_t v = 0; v < m.vertex_count(); v += 97) {
    const double theta = m.vertices()[v].polar();
    EXPECT_NEAR(rn[v], full[v].excess_over(theta), 1e-12);
  }
}

TEST(Mesh, SnapFindsInsertedPoints) {
  const auto m = build_mesh(ConformalFactorSpec::base(), 3);
  const auto p = SpherePoint::on_equator(midpoint_azimuth(3));
  EXPECT_NEAR(distance(m.vertices()[m.snap(p)], p), 0.0, 1e-15);
}

TEST(Mesh, CsvHasHeader) {
  std::ostringstream os;
  write_mesh_csv(os, build_mesh(ConformalFactorSpec::unit(), 0, MeshOptions::bare()));
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "index,x,y,z,theta,phi,omega");
}

#include <gtest/gtest.h>

#include "lorhom/errors.hpp"
#include "lorhom/random.hpp"
#include "lorhom/sphere.hpp"

using namespace lorhom;

TEST(Sphere, PolesAndAngles) {
  EXPECT_DOUBLE_EQ(SpherePoint::north().polar(), 0.0);
  EXPECT_DOUBLE_EQ(SpherePoint::south().polar(), kPi);
  EXPECT_EQ(SpherePoint::north().azimuth(), 0.0);
  const auto p = SpherePoint::from_angles(1.1, -2.3);
  EXPECT_NEAR(p.polar(), 1.1, 1e-15);
  EXPECT_NEAR(p.azimuth(), -2.3, 1e-15);
}

TEST(Sphere, ZeroVectorRejected) { EXPECT_THROW(SpherePoint(Vec3::Zero()), InvalidArgument); }

TEST(Sphere, DistanceAcrossSeamIsShort) {
  const auto a = SpherePoint::on_equator(kPi - 0.01);
  const auto b = SpherePoint::on_equator(-kPi + 0.01);
  EXPECT_NEAR(distance(a, b), 0.02, 1e-14);
  EXPECT_NEAR(azimuth_step(kPi - 0.01, -kPi + 0.01), 0.02, 1e-14);
  EXPECT_NEAR(distance(SpherePoint::north(), SpherePoint::south()), kPi, 1e-15);
}

TEST(Sphere, SlerpStaysOnGreatCircle) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto a = SpherePoint::from_angles(rng.uniform(0.1, 3.0), rng.uniform(-kPi, kPi));
    const auto b = SpherePoint::from_angles(rng.uniform(0.1, 3.0), rng.uniform(-kPi, kPi));
    const double d = distance(a, b);
    const double s = rng.uniform();
    const auto m = slerp(a, b, s);
    EXPECT_NEAR(distance(a, m), s * d, 1e-12);
    EXPECT_NEAR(distance(m, b), (1 - s) * d, 1e-12);
  }
}

TEST(Sphere, ExpMapFollowsMeridian) {
  const auto p = exp_map(SpherePoint::north(), 0.7 * Vec3(std::cos(0.4), std::sin(0.4), 0.0));
  EXPECT_NEAR(p.polar(), 0.7, 1e-15);
  EXPECT_NEAR(p.azimuth(), 0.4, 1e-15);
}

TEST(Sphere, TangentFrame) {
  const auto p = SpherePoint::from_angles(0.9, 2.0);
  const Vec3 et = polar_direction(p);
  const Vec3 ep = azimuth_direction(p);
  EXPECT_NEAR(et.dot(p.position()), 0.0, 1e-15);
  EXPECT_NEAR(ep.dot(p.position()), 0.0, 1e-15);
  EXPECT_NEAR(et.dot(ep), 0.0, 1e-15);
  EXPECT_NEAR(et.norm(), 1.0, 1e-15);
}

TEST(Sphere, MeridianAndMidpointAzimuths) {
  EXPECT_DOUBLE_EQ(meridian_azimuth(1), 1.0 / kPi);
  EXPECT_NEAR(midpoint_azimuth(1), 3.0 / (4.0 * kPi), 1e-16);
  EXPECT_NEAR(midpoint_azimuth(1), 0.2387, 1e-4);
}

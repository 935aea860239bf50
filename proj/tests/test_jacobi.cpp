#include <gtest/gtest.h>

#include "lorhom/errors.hpp"
#include "lorhom/jacobi.hpp"

using namespace lorhom;

TEST(Jacobi, RoundSphereConjugateAtAntipode) {
  const auto c = conjugate_point(ConformalFactorSpec::unit(), SpherePoint::north(), Vec3(1, 0, 0), 4.0);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(*c, kPi, 1e-8);
}

TEST(Jacobi, ScaledSphereConjugateScales) {
  const auto c = conjugate_point(ConformalFactorSpec::unit().scaled(4.0), SpherePoint::north(),
                                 Vec3(1, 0, 0), 8.0);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(*c, 2.0 * kPi, 1e-7);
}

TEST(Jacobi, NoConjugateBeforeLimit) {
  EXPECT_FALSE(conjugate_point(ConformalFactorSpec::unit(), SpherePoint::north(), Vec3(1, 0, 0), 3.0)
                   .has_value());
}

TEST(Jacobi, BaseFactorConjugateAlongZeroMeridian) {
  const auto c = conjugate_point(ConformalFactorSpec::base(), SpherePoint::north(), Vec3(1, 0, 0), 4.0);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(*c, kPi, 1e-3);
}

TEST(Jacobi, LightlikeMeridiansAreGeodesics) {
  const auto f = ConformalFactorSpec::base();
  for (int n = 1; n <= 8; ++n) EXPECT_LT(meridian_geodesic_residual(f, meridian_azimuth(n)), 1e-12);
  EXPECT_EQ(meridian_geodesic_residual(f, 0.0), 0.0);
  EXPECT_GT(meridian_geodesic_residual(f, 0.25), 1e-9);
}

TEST(Jacobi, CutPointOfBaseIsSouthPole) {
  const auto f = ConformalFactorSpec::base();
  const auto mesh = build_mesh(f, 4);
  const auto cut = cut_point(f, 0.0, mesh);
  EXPECT_TRUE(cut.minimizing_to_end);
  EXPECT_NEAR(cut.cut_distance, kPi, cut.tolerance);
  EXPECT_THROW(cut_point(f, 0.25, mesh), InvalidArgument);
}

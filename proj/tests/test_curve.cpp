#include <gtest/gtest.h>

#include "lorhom/curve.hpp"
#include "lorhom/errors.hpp"

using namespace lorhom;

TEST(Curve, UnitMeridianHasLengthPi) {
  const auto u = ConformalFactorSpec::unit();
  for (double az : {0.0, 0.5, -2.0, kPi})
    EXPECT_NEAR(length(u, meridian(az)), kPi, 1e-10);
}

TEST(Curve, LightlikeMeridiansHaveLengthPi) {
  const auto f = ConformalFactorSpec::base();
  for (int n = 1; n <= 8; ++n) {
    const auto l = length_split(f, meridian(meridian_azimuth(n)));
    EXPECT_NEAR(l.excess_over(kPi), 0.0, 1e-9) << "n=" << n;
  }
}

TEST(Curve, MeridianBetweenLightlikeOnesIsLonger) {
  // 40-digit quadrature of ∫√Ω dθ − π along φ = 0.25.
  const auto f = ConformalFactorSpec::base();
  const auto l = length_split(f, meridian(0.25));
  EXPECT_NEAR(l.excess_over(kPi) / 2.9004535012265040763e-8, 1.0, 1e-6);
  EXPECT_NEAR(polar_excess(f, meridian(0.25)) / 2.9004535012265040763e-8, 1.0, 1e-6);
}

TEST(Curve, EquatorArcsExceedRoundLength) {
  const auto f = ConformalFactorSpec::base();
  const auto l = length_split(f, equator_arc(0.2, 0.3));
  EXPECT_NEAR(l.surplus / 9.8960194029118370284e-9, 1.0, 1e-6);
  for (auto [a, b] : {std::pair{0.09, 0.1}, {0.4, 1.2}, {0.11, 0.15}}) {
    const auto s = length_split(f, equator_arc(a, b));
    EXPECT_GT(s.surplus, 0.0);
    EXPECT_NEAR(s.base, b - a, 1e-12);
  }
}

TEST(Curve, ScalingFactorScalesLength) {
  const auto f = ConformalFactorSpec::base();
  const auto c = meridian(0.7, 512);
  EXPECT_NEAR(length(f.scaled(4.0), c), 2.0 * length(f, c), 1e-12);
  EXPECT_NEAR(length(ConformalFactorSpec::unit().scaled(9.0), c), 3.0 * kPi, 1e-12);
}

TEST(Curve, ReparametrizationInvariance) {
  const auto f = ConformalFactorSpec::base();
  std::vector<double> t;
  std::vector<SpherePoint> p;
  for (int k = 0; k <= 300; ++k) {
    const double s = static_cast<double>(k) / 300;
    t.push_back(s * s * s + s);
    p.push_back(SpherePoint::on_equator(0.4 + 0.8 * s));
  }
  EXPECT_NEAR(length(f, SphereCurve(t, p)), length(f, equator_arc(0.4, 1.2, 301)), 1e-12);
}

TEST(Curve, PolarDetourMatchesDirectDifference) {
  const auto a = SpherePoint::from_angles(0.4, 0.1);
  const auto b = SpherePoint::from_angles(1.3, 0.9);
  EXPECT_NEAR(polar_detour(a, b), distance(a, b) - (1.3 - 0.4), 1e-14);
  EXPECT_EQ(polar_detour(SpherePoint::from_angles(0.3, 1.0), SpherePoint::from_angles(0.5, 1.0)), 0.0);
  EXPECT_NEAR(polar_detour(SpherePoint::from_angles(0.5, 1.0), SpherePoint::from_angles(0.3, 1.0)),
              0.4, 1e-15);
}

TEST(Curve, RejectsBadSamples) {
  EXPECT_THROW(SphereCurve({0.0, 0.0}, {SpherePoint::north(), SpherePoint::south()}), InvalidArgument);
  EXPECT_THROW(SphereCurve({0.0, 1.0}, {SpherePoint::north()}), InvalidArgument);
}

#include <gtest/gtest.h>

#include <cmath>

#include "lorhom/errors.hpp"
#include "lorhom/factor.hpp"

using namespace lorhom;

namespace {

// Reference values from 40-digit evaluation of e^{-1/φ²} sin²(1/φ) at the
// excess points pₙ, φ = (1/n + 1/(n+1))/(2π).
constexpr double kExcessAtP[8] = {1.7986480363694588081e-8,  1.8502900206700815712e-25,
                                  3.907310991780695934e-51,  2.0833279228991246374e-85,
                                  2.9133621681507738496e-128, 1.0805954392000909519e-179,
                                  1.0676279397151810428e-239, 2.8151210075264252435e-308};

}  // namespace

TEST(Factor, EquatorValueAtTwoOverPi) {
  const auto f = ConformalFactorSpec::base();
  EXPECT_NEAR(evaluate_factor(f, SpherePoint::on_equator(2.0 / kPi)),
              1.084804972471113777302191522641103487696, 1e-14);
}

TEST(Factor, ExcessAtMidpointsMatchesReference) {
  const auto f = ConformalFactorSpec::base();
  for (int n = 1; n <= 8; ++n) {
    const double e = f.excess(SpherePoint::on_equator(midpoint_azimuth(n)));
    EXPECT_NEAR(e / kExcessAtP[n - 1], 1.0, 1e-10) << "n=" << n;
  }
}

TEST(Factor, TransitionBandValue) {
  const auto f = ConformalFactorSpec::base();
  const auto p = SpherePoint::from_angles(kPi / 2 + 0.45, 1.9);
  EXPECT_NEAR(f.excess(p), 0.063146266909574831313, 1e-14);
  EXPECT_NEAR(detail::polar_profile(kPi / 2 + 0.45, f.base_params()).v, 0.5, 1e-14);
}

TEST(Factor, UnitOnMeridiansPolesAndSeam) {
  const auto f = ConformalFactorSpec::base();
  for (int n = 1; n <= 8; ++n)
    for (double th : {0.3, 1.2, kPi / 2, 2.0})
      EXPECT_LE(std::abs(f.excess(SpherePoint::from_angles(th, meridian_azimuth(n)))), 1e-30);
  EXPECT_EQ(f.excess(SpherePoint::north()), 0.0);
  EXPECT_EQ(f.excess(SpherePoint::south()), 0.0);
  EXPECT_EQ(f.excess(SpherePoint::on_equator(kPi)), 0.0);
  EXPECT_EQ(f.excess(SpherePoint::on_equator(0.0)), 0.0);
  EXPECT_EQ(f.excess(SpherePoint::from_angles(kPi / 2 - 0.61, 1.0)), 0.0);
}

TEST(Factor, FactorIsAtLeastOneAndSmallerThanTwo) {
  const auto f = ConformalFactorSpec::base();
  for (int i = 1; i < 64; ++i)
    for (int j = 0; j < 128; ++j) {
      const double v = f.value(SpherePoint::from_angles(kPi * i / 64, -kPi + 2 * kPi * j / 128));
      EXPECT_GE(v, 1.0);
      EXPECT_LT(v, 2.0);
    }
}

TEST(Factor, LogExcessSurvivesUnderflow) {
  const auto f = ConformalFactorSpec::base();
  const auto p = SpherePoint::on_equator(0.02);
  EXPECT_EQ(f.excess(p), 0.0);
  EXPECT_TRUE(std::isfinite(f.log_excess(p)));
  EXPECT_NEAR(f.log_excess(p), -1.0 / (0.02 * 0.02) + 2 * std::log(std::abs(std::sin(50.0))), 1e-9);
  EXPECT_EQ(ConformalFactorSpec::unit().log_excess(p), -std::numeric_limits<double>::infinity());
}

TEST(Factor, ValidationBasePassesUnitFailsOnlyC2) {
  const auto base = validate_factor(ConformalFactorSpec::base(), 256, 512);
  EXPECT_TRUE(base.all_passed());
  const auto unit = validate_factor(ConformalFactorSpec::unit(), 256, 512);
  EXPECT_FALSE(unit.all_passed());
  for (const char* name : {"a", "b", "c1"}) EXPECT_TRUE(unit.condition(name).passed) << name;
  EXPECT_FALSE(unit.condition("c2").passed);
}

TEST(Factor, ValidationRejectsCoarseGrid) {
  EXPECT_THROW(validate_factor(ConformalFactorSpec::base(), 128, 512), InvalidArgument);
}

TEST(Factor, ScaledFactor) {
  const auto f = ConformalFactorSpec::base().scaled(4.0);
  const auto p = SpherePoint::on_equator(1.0);
  EXPECT_NEAR(f.value(p), 4.0 * ConformalFactorSpec::base().value(p), 1e-14);
  EXPECT_THROW(ConformalFactorSpec::base().scaled(-1.0), InvalidArgument);
  EXPECT_FALSE(f == ConformalFactorSpec::base());
  EXPECT_TRUE(ConformalFactorSpec::base() == ConformalFactorSpec::base());
}

TEST(Factor, DipPeakAndSupport) {
  BaseFactorParams bp;
  const auto q = SpherePoint::on_equator(meridian_azimuth(1));
  const auto f = ConformalFactorSpec::modified(bp, {Dip{q, 0.02, 0.3}});
  EXPECT_NEAR(f.value(q), 0.7, 1e-15);
  EXPECT_EQ(f.excess(SpherePoint::on_equator(meridian_azimuth(1) + 0.011)),
            ConformalFactorSpec::base().excess(SpherePoint::on_equator(meridian_azimuth(1) + 0.011)));
  EXPECT_NEAR(f.min_dip_radius(), 0.01, 1e-16);
  EXPECT_THROW(ConformalFactorSpec::modified(bp, {Dip{q, 0.02, 1.0}}), InvalidArgument);
  EXPECT_THROW(ConformalFactorSpec::modified(bp, {Dip{q, 0.02, 0.1}, Dip{q, 0.02, 0.1}}),
               InvalidArgument);
}

TEST(Factor, InvalidShapeRejected) {
  BaseFactorParams bp;
  bp.plateau_half_width = 0.7;
  EXPECT_THROW(ConformalFactorSpec::base(bp), InvalidArgument);
}

TEST(Factor, JetMatchesDifferences) {
  const auto f = ConformalFactorSpec::base();
  const auto p = SpherePoint::from_angles(1.3, 0.7);
  const auto jet = f.jet(p);
  const double h = 1e-6;
  const Vec3 e = azimuth_direction(p);
  const double d = (f.value(exp_map(p, h * e)) - f.value(exp_map(p, -h * e))) / (2 * h);
  EXPECT_NEAR(jet.gradient.dot(e), d, 1e-7);
  EXPECT_NEAR(jet.value, f.value(p), 1e-15);
}

#include <gtest/gtest.h>

#include <sstream>

#include "lorhom/errors.hpp"
#include "lorhom/spacetime.hpp"

using namespace lorhom;

TEST(Spacetime, LiftsOfLightlikeMeridians) {
  const auto f = ConformalFactorSpec::base();
  for (int n = 1; n <= 8; ++n) {
    const auto c = classify(lift_meridian(n, f));
    EXPECT_EQ(c.verdict, CausalVerdict::Lightlike) << n;
    EXPECT_LE(c.max_deviation, 1e-6);
  }
  EXPECT_THROW(lift_meridian(9, f), InvalidArgument);
  EXPECT_THROW(lift_meridian(0, f), InvalidArgument);
}

TEST(Spacetime, OffMeridianLiftIsNotCausal) {
  const auto f = ConformalFactorSpec::base();
  EXPECT_EQ(classify(lift_azimuth(1.9, f)).verdict, CausalVerdict::NonCausal);
  EXPECT_EQ(classify(lift_azimuth(0.25, f), 1e-10).verdict, CausalVerdict::NonCausal);
}

TEST(Spacetime, ConstantCurveIsTimelike) {
  const auto c = classify(constant_curve(SpherePoint::on_equator(1.0), ConformalFactorSpec::base()));
  EXPECT_EQ(c.verdict, CausalVerdict::Timelike);
  EXPECT_DOUBLE_EQ(c.worst_ratio, 0.0);
}

TEST(Spacetime, DeformNeedsSlack) {
  EXPECT_THROW(deform_to_timelike(lift_meridian(1, ConformalFactorSpec::unit())), NoSlack);
  EXPECT_THROW(deform_to_timelike(lift_azimuth(0.25, ConformalFactorSpec::base())), NoSlack);
}

TEST(Spacetime, DeformKeepsTraceAndEndpoints) {
  BaseFactorParams bp;
  const auto q = SpherePoint::on_equator(meridian_azimuth(1));
  const auto f = ConformalFactorSpec::modified(bp, {Dip{q, 0.02, 0.2}});
  const auto lift = lift_meridian(1, f);
  const auto c = classify(lift);
  EXPECT_EQ(c.verdict, CausalVerdict::Causal);
  const auto d = deform_to_timelike(lift);
  EXPECT_EQ(classify(d).verdict, CausalVerdict::Timelike);
  EXPECT_EQ(d.times().front(), 0.0);
  EXPECT_EQ(d.times().back(), kPi);
  EXPECT_TRUE(d.deformed());
  for (std::size_t k = 0; k < d.size(); ++k)
    EXPECT_EQ(d.space().point(k).position(), lift.space().point(k).position());
}

TEST(Spacetime, LimitCurveCheck) {
  const auto f = ConformalFactorSpec::base();
  std::vector<SpacetimeCurve> seq;
  for (int n = 1; n <= 8; ++n) seq.push_back(lift_meridian(n, f));
  const auto r = limit_curve_check(seq, lift_azimuth(0.0, f));
  EXPECT_TRUE(r.monotone);
  for (int n = 1; n <= 8; ++n) EXPECT_NEAR(r.distances[n - 1], 1.0 / (n * kPi), 1e-6);
  EXPECT_EQ(r.limit.verdict, CausalVerdict::Lightlike);

  const auto same = limit_curve_check({seq[2], seq[2]}, seq[2]);
  EXPECT_EQ(same.distances[0], 0.0);
  EXPECT_THROW(limit_curve_check({lift_meridian(1, f, 100)}, lift_azimuth(0.0, f)), InvalidArgument);
}

TEST(Spacetime, CsvHeader) {
  std::ostringstream os;
  write_spacetime_csv(os, lift_meridian(2, ConformalFactorSpec::base(), 16));
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "t,tau,x,y,z,ratio");
}

#include <gtest/gtest.h>

#include <algorithm>

#include "lorhom/adversary.hpp"
#include "lorhom/certifier.hpp"
#include "lorhom/errors.hpp"

using namespace lorhom;

namespace {

// Level 4/5 fields are shared across tests to keep the suite fast.
const ExcessField& base_field(int level) {
  static const ExcessField l4(ConformalFactorSpec::base(), 4);
  static const ExcessField l5(ConformalFactorSpec::base(), 5);
  return level == 4 ? l4 : l5;
}

}  // namespace

TEST(Certifier, ScanSetIsFixed) {
  const auto a = certificate_scan_azimuths(8);
  EXPECT_EQ(a, certificate_scan_azimuths(8));
  for (int n = 1; n <= 8; ++n)
    EXPECT_NE(std::find(a.begin(), a.end(), midpoint_azimuth(n)), a.end());
}

TEST(Certifier, UnitFactorIsNotObstructed) {
  const auto u = ConformalFactorSpec::unit();
  const ExcessField c(u, 3), f(u, 4);
  const auto cert = obstruction_margin(1, 2, c, f);
  EXPECT_EQ(cert.margin, 0.0);
  EXPECT_EQ(cert.verdict, ObstructionVerdict::NotObstructed);
}

TEST(Certifier, BaseFactorIsObstructed) {
  const auto cert = obstruction_margin(1, 2, base_field(4), base_field(5));
  EXPECT_EQ(cert.verdict, ObstructionVerdict::Obstructed);
  EXPECT_GT(cert.margin, cert.error_bar);
  EXPECT_NEAR(cert.margin / cert.coarse_margin, 1.0, 1e-3);
}

TEST(Certifier, ArcNestingIsMonotone) {
  double prev = 0.0;
  for (int j = 2; j <= 5; ++j) {
    const auto cert = obstruction_margin(1, j, base_field(4), base_field(5));
    EXPECT_GE(cert.arcs[0].max_excess, prev);
    prev = cert.arcs[0].max_excess;
  }
}

TEST(Certifier, ExcessVanishesOnMeridiansOnly) {
  const auto& f = base_field(5);
  EXPECT_GT(f.excess(midpoint_azimuth(1)), 0.0);
  EXPECT_LT(std::abs(f.excess(midpoint_azimuth(1))), 1e-7);
  EXPECT_THROW(f.excess(0.123456), InvalidArgument);
}

TEST(Certifier, InvalidPairs) {
  EXPECT_THROW(obstruction_margin(2, 1, base_field(4), base_field(5)), InvalidArgument);
  EXPECT_THROW(obstruction_margin(1, 9, base_field(4), base_field(5)), InvalidArgument);
}

TEST(Certifier, RotationHomotopyHasLongRow) {
  const auto f = ConformalFactorSpec::base();
  const auto h = rotation_homotopy(meridian_azimuth(1), meridian_azimuth(2), Winding::Short, 64, 256);
  const auto v = verify_causal_homotopy(f, h);
  EXPECT_GT(v.violations, 0u);
  EXPECT_GT(v.max_row_excess, 0.0);
  EXPECT_TRUE(v.arcs_available);
  EXPECT_EQ(v.arcs.outcome, ArcOutcome::ShortArc);
  const auto st = verify_causal_homotopy(f, h, VerificationModel::Spacetime);
  EXPECT_GT(st.violations, 0u);
}

TEST(Certifier, TrivialHomotopyHasNoViolations) {
  const auto f = ConformalFactorSpec::base();
  const auto h = rotation_homotopy(meridian_azimuth(1), meridian_azimuth(1), Winding::Short, 8, 256);
  const auto v = verify_causal_homotopy(f, h);
  EXPECT_EQ(v.violations, 0u);
  EXPECT_FALSE(v.inconsistency_alarm);
}

TEST(Certifier, NonMeridianBoundaryIsMalformed) {
  const auto h = rotation_homotopy(meridian_azimuth(1), meridian_azimuth(2), Winding::Short, 8, 64);
  const auto p = perturb_homotopy(h, 1, 0.05);
  auto pts = p.points();
  for (std::size_t j = 1; j + 1 < p.columns(); ++j) pts[j] = p.at(4, j);
  EXPECT_THROW(verify_causal_homotopy(ConformalFactorSpec::base(), HomotopyGrid(p.s_values(), p.t_values(), pts)),
               MalformedGrid);
}

TEST(Certifier, UnitRotationIsCausal) {
  const auto u = ConformalFactorSpec::unit();
  const auto h = rotation_homotopy(meridian_azimuth(1), meridian_azimuth(2), Winding::Short, 16, 128);
  EXPECT_EQ(verify_causal_homotopy(u, h).violations, 0u);
  EXPECT_EQ(verify_causal_homotopy(u, h, VerificationModel::Spacetime).violations, 0u);
}

TEST(Adversary, DegenerateAndRoundCases) {
  const auto f = ConformalFactorSpec::base();
  AdversaryOptions o;
  o.iterations = 50;
  const auto same = attempt_causal_homotopy(f, lift_meridian(2, f), lift_meridian(2, f), o);
  EXPECT_EQ(same.residual, 0.0);
  EXPECT_EQ(same.iterations, 0);
  const auto u = ConformalFactorSpec::unit();
  EXPECT_LT(attempt_causal_homotopy(u, lift_meridian(1, u), lift_meridian(2, u), o).residual, 1e-6);
}

TEST(Adversary, ShortRunKeepsResidual) {
  const auto f = ConformalFactorSpec::base();
  AdversaryOptions o;
  o.iterations = 200;
  const auto r = attempt_causal_homotopy(f, lift_meridian(1, f), lift_meridian(2, f), o);
  EXPECT_GT(r.residual, 1.4e-7);
  EXPECT_LE(r.residual, r.initial_residual);
  const auto again = attempt_causal_homotopy(f, lift_meridian(1, f), lift_meridian(2, f), o);
  EXPECT_EQ(r.residual, again.residual);
}

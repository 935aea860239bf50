#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "lorhom/errors.hpp"
#include "lorhom/timelike.hpp"

using namespace lorhom;

namespace {

const TimelikePipeline& pipeline() {
  static const TimelikePipeline p = build_timelike_pipeline(6);
  return p;
}

}  // namespace

TEST(Timelike, DeriveExcessFirstIndex) {
  const auto e = derive_excess(ConformalFactorSpec::base(), 1);
  EXPECT_NEAR(e.mu / (0.5 * 1.7986480363694588081e-8), 1.0, 1e-10);
  EXPECT_GT(e.delta, 0.0);
  EXPECT_LE(e.delta, 0.5 * (meridian_azimuth(1) - meridian_azimuth(2)) + 1e-15);
}

TEST(Timelike, DeriveExcessTinyButPositive) {
  const auto e = derive_excess(ConformalFactorSpec::base(), 5);
  EXPECT_NEAR(e.mu / (0.5 * 2.9133621681507738496e-128), 1.0, 1e-9);
}

TEST(Timelike, DeriveExcessErrors) {
  EXPECT_THROW(derive_excess(ConformalFactorSpec::unit(), 1), InvalidArgument);
  EXPECT_THROW(derive_excess(ConformalFactorSpec::base(), 8), InvalidArgument);
  EXPECT_THROW(derive_excess(ConformalFactorSpec::base(), 0), InvalidArgument);
}

TEST(Timelike, PipelineSatisfiesInvariants) {
  const auto& p = pipeline();
  EXPECT_TRUE(p.params.violations().empty());
  EXPECT_TRUE(sample_excess_violations(p.base, p.params).empty());
  ASSERT_EQ(p.params.nu.size(), 6u);
  ASSERT_EQ(p.params.mu.size(), 5u);
  for (std::size_t k = 1; k < 6; ++k) {
    EXPECT_LT(p.params.nu[k], p.params.nu[k - 1]);
    EXPECT_LT(p.params.epsilon[k], p.params.epsilon[k - 1]);
  }
  for (std::size_t k = 1; k < 5; ++k) {
    EXPECT_LT(p.params.mu[k], p.params.mu[k - 1]);
    EXPECT_LT(p.params.delta[k], p.params.delta[k - 1]);
  }
}

TEST(Timelike, DetourBoundInequalityHolds) {
  const auto& s = pipeline().params;
  for (std::size_t m = 0; m < s.q.size(); ++m)
    for (const auto& p : s.p) {
      const double L0 = kPi + distance(s.q[m], p) - s.epsilon[m];
      EXPECT_GT(std::sqrt(1.0 - s.nu[m]) * L0, kPi);
    }
}

TEST(Timelike, CrossingBudgetCollapses) {
  const auto p = build_timelike_pipeline(6, DipRule::CrossingBudget);
  EXPECT_TRUE(p.params.violations().empty());
  EXPECT_LT(p.params.nu[0], 1e-27);
}

TEST(Timelike, HugeDipDiameterRejected) {
  auto s = pipeline().params;
  for (int k = 0; k < 6; ++k) s.epsilon[k] = meridian_azimuth(k + 1);
  EXPECT_FALSE(s.violations().empty());
  EXPECT_THROW(s.validate(), InvalidArgument);
  EXPECT_THROW(make_param_set(6, DipRule::DetourBound, s.mu, s.delta, s.nu, s.epsilon), InvalidArgument);
}

TEST(Timelike, InflatedDepthIsFlagged) {
  auto s = pipeline().params;
  for (double& v : s.nu) v = std::min(0.99, 100 * v);
  const auto v = s.violations();
  EXPECT_NE(std::find_if(v.begin(), v.end(),
                         [](const std::string& x) { return x.find("detour-bound") != std::string::npos; }),
            v.end());
}

TEST(Timelike, ModifiedFactorShape) {
  const auto& p = pipeline();
  for (int n = 1; n <= 6; ++n) {
    const auto q = SpherePoint::on_equator(meridian_azimuth(n));
    EXPECT_NEAR(p.modified.value(q), 1.0 - p.params.nu[n - 1], 1e-15);
  }
  for (int n = 1; n <= 5; ++n) {
    const auto pn = SpherePoint::on_equator(midpoint_azimuth(n));
    EXPECT_EQ(p.modified.excess(pn), p.base.excess(pn));
  }
  for (double th : {0.2, kPi / 2 - 0.61, kPi / 2 + 0.7})
    for (double az : {0.0, meridian_azimuth(1), 1.0})
      EXPECT_EQ(p.modified.value(SpherePoint::from_angles(th, az)), 1.0);
}

TEST(Timelike, LiftsBecomeCausalWithTimelikeMiddle) {
  const auto& p = pipeline();
  for (int n = 1; n <= 6; ++n) {
    const auto lift = lift_meridian(n, p.modified);
    const auto c = classify(lift);
    EXPECT_EQ(c.verdict, CausalVerdict::Causal);
    EXPECT_LT(c.min_ratio, 1.0 - kCausalTolerance);
    const auto d = deform_to_timelike(lift);
    EXPECT_EQ(classify(d).verdict, CausalVerdict::Timelike);
  }
}

TEST(Timelike, BuildRequiresBase) {
  EXPECT_THROW(build_modified_factor(ConformalFactorSpec::unit(), pipeline().params), InvalidArgument);
}

TEST(Timelike, ClaimOnCoarseMeshes) {
  const auto& p = pipeline();
  const ExcessField c(p.modified, 3), f(p.modified, 4);
  for (const auto& e : validate_claim32(p.params, c, f)) {
    EXPECT_TRUE(e.validated) << e.n;
    EXPECT_GT(e.excess, 0.0);
  }
  const auto u = ConformalFactorSpec::unit();
  BaseFactorParams bp;
  bp.max_index = 6;
  const ExcessField uc(u, 3), uf(u, 4);
  for (const auto& e : validate_claim32(p.params, uc, uf)) {
    EXPECT_EQ(e.excess, 0.0);
    EXPECT_TRUE(e.inconclusive);
  }
}

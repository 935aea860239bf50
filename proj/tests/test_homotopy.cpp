#include <gtest/gtest.h>

#include <sstream>

#include "lorhom/errors.hpp"
#include "lorhom/swept_arcs.hpp"

using namespace lorhom;

TEST(Homotopy, RotationGridIsPinned) {
  const auto h = rotation_homotopy(0.1, 0.3, Winding::Short, 8, 32);
  EXPECT_EQ(h.rows(), 9u);
  EXPECT_EQ(h.columns(), 33u);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    EXPECT_EQ(h.at(i, 0).position(), SpherePoint::north().position());
    EXPECT_EQ(h.at(i, 32).position(), SpherePoint::south().position());
  }
  EXPECT_NEAR(meridian_azimuth_of(h.row(8)), 0.3, 1e-14);
}

TEST(Homotopy, MalformedGridsRejected) {
  const auto h = rotation_homotopy(0.1, 0.3, Winding::Short, 2, 4);
  auto pts = h.points();
  pts[4] = SpherePoint::on_equator(0.0);
  EXPECT_THROW(HomotopyGrid(h.s_values(), h.t_values(), pts), MalformedGrid);
  auto t = h.t_values();
  t.back() = 3.0;
  EXPECT_THROW(HomotopyGrid(h.s_values(), t, h.points()), MalformedGrid);
  EXPECT_THROW(HomotopyGrid({0.0, 1.0}, h.t_values(), h.points()), MalformedGrid);
}

TEST(Homotopy, PerturbationIsSeededAndKeepsBoundary) {
  const auto h = rotation_homotopy(0.1, 0.3, Winding::Short, 16, 64);
  const auto a = perturb_homotopy(h, 5, 0.02);
  const auto b = perturb_homotopy(h, 5, 0.02);
  const auto c = perturb_homotopy(h, 6, 0.02);
  EXPECT_EQ(a.points()[8 * 65 + 30].position(), b.points()[8 * 65 + 30].position());
  EXPECT_NE(a.points()[8 * 65 + 30].position(), c.points()[8 * 65 + 30].position());
  for (std::size_t j = 0; j < h.columns(); ++j) {
    EXPECT_EQ(a.at(0, j).position(), h.at(0, j).position());
    EXPECT_EQ(a.at(16, j).position(), h.at(16, j).position());
  }
}

TEST(Homotopy, TopologicalHomotopyNeedsDistinctMeridians) {
  const auto f = ConformalFactorSpec::base();
  EXPECT_THROW(topological_homotopy(lift_meridian(1, f, 65), lift_meridian(1, f, 65)), InvalidArgument);
  const auto h = topological_homotopy(lift_meridian(1, f, 65), lift_meridian(3, f, 65), 16);
  EXPECT_EQ(h.rows(), 17u);
  EXPECT_EQ(h.columns(), lift_meridian(1, f, 65).times().size());
}

TEST(SweptArcs, ShortRotationCoversShortArc) {
  const double lo = meridian_azimuth(2), hi = meridian_azimuth(1);
  const auto h = rotation_homotopy(hi, lo, Winding::Short, 64, 256);
  const auto r = swept_equator_arcs(h, lo, hi);
  EXPECT_EQ(r.outcome, ArcOutcome::ShortArc);
  EXPECT_TRUE(r.short_arc);
  EXPECT_FALSE(r.long_arc);
}

TEST(SweptArcs, LongRotationCoversLongArc) {
  const double lo = meridian_azimuth(2), hi = meridian_azimuth(1);
  const auto h = rotation_homotopy(hi, lo, Winding::Long, 512, 256);
  const auto r = swept_equator_arcs(h, lo, hi);
  EXPECT_EQ(r.outcome, ArcOutcome::LongArc);
}

TEST(SweptArcs, PerturbedRotationStillCoversArc) {
  const double lo = meridian_azimuth(3), hi = meridian_azimuth(1);
  const auto h = perturb_homotopy(rotation_homotopy(hi, lo, Winding::Short, 64, 256), 17, 0.02);
  EXPECT_EQ(swept_equator_arcs(h, lo, hi).outcome, ArcOutcome::ShortArc);
}

TEST(Homotopy, CsvHeader) {
  std::ostringstream os;
  write_homotopy_csv(os, rotation_homotopy(0.1, 0.3, Winding::Short, 1, 2));
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "i,j,s,t,x,y,z");
}

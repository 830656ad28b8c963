#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "olb/centers.hpp"
#include "olb/error.hpp"
#include "olb/olbmap.hpp"

using namespace olb;

namespace {

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / *hi;
}

}  // namespace

TEST(Centers, TangencyResiduals) {
  const Oval table(Ellipse{2.0, 1.0});
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ur(2.5, 40.0), ua(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const Vec2 x = ur(rng) * direction(ua(rng));
    const AuxCircle c = aux_circle(table, x);
    EXPECT_LT(distance(circle_center(table, x), c.center), 1e-15 * norm(c.center) + 1e-15);
    const double scale = std::max(1.0, c.radius);
    EXPECT_NEAR(distance(c.center, c.tangency.position), c.radius, 1e-10 * scale);
  }
}

TEST(Centers, CircleTableCentreDistance) {
  // Oracle: for the unit circle the centre is R^2 x' (see the aux-circle
  // closed form), so its distance from the origin is R^2.
  for (double R : {3.0, 10.0, 100.0}) {
    EXPECT_NEAR(norm(circle_center(Oval(Circle{1.0}), R * direction(0.4))), R * R, 1e-9 * R * R);
  }
}

TEST(Centers, CentreDistanceAsymptotic) {
  // R w(beta + pi/2) = 2 r^2 + O(r): the scaled gap stays bounded.
  const Oval table(Ellipse{2.0, 1.0});
  double q[2];
  for (int k = 0; k < 2; ++k) {
    const double r = k == 0 ? 1e2 : 1e3;
    double s = 0.0;
    for (int i = 0; i < 16; ++i) {
      const Vec2 c = circle_center(table, r * direction(kTwoPi * i / 16 + 0.1));
      s = std::max(s, std::abs(norm(c) * width(table, polar_angle(c) + kPi / 2) - 2 * r * r) / r);
    }
    q[k] = s;
  }
  EXPECT_LT(q[1], 2.0 * q[0] + 1.0);
  EXPECT_LT(q[0], 50.0);
}

TEST(Centers, CircleTraceIsUnitCircle) {
  const CenterTrace tr = rescaled_center_orbit(Oval(Circle{1.0}), Vec2{1e3, 0.0}, 200);
  ASSERT_EQ(tr.records.size(), 200u);
  for (const auto& rec : tr.records) EXPECT_NEAR(norm(rec.rescaled), 1.0, 1e-3);
  EXPECT_EQ(tr.records[1].step, 2u);
  EXPECT_EQ(rescaled_center_orbit(Oval(Circle{1.0}), Vec2{1e3, 0.0}, 3, true).records[0].step, 1u);
}

TEST(Centers, HamLevel) {
  EXPECT_NEAR(ham_level(Oval(Circle{1.0}), Vec2{3.0, 4.0}), 10.0, 1e-14);
  try {
    const Oval c(Circle{1.0});
    ham_level(c, c.origin());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AtOrigin);
  }
  // The unit level curve is the dual of the symmetrization turned a quarter.
  const Oval table = parse_table("lp:p=1.5");
  const RadialCurve d = dual_symmetrized(table);
  for (int i = 0; i < 256; ++i) {
    const double a = kTwoPi * i / 256;
    const Vec2 p = table.origin() + d.radius(a) * direction(a + kPi / 2);
    EXPECT_NEAR(ham_level(table, p), 1.0, 1e-10);
  }
}

TEST(Centers, EllipseTraceFollowsALevelSet) {
  const Oval table(Ellipse{2.0, 1.0});
  const CenterTrace tr = rescaled_center_orbit(table, Vec2{1e3, 0.0}, 500);
  std::vector<double> h;
  for (const auto& rec : tr.records) h.push_back(ham_level(table, table.origin() + rec.rescaled));
  EXPECT_LT(spread(h), 0.02);
  // About 2 on the rescaled scale, from R w = 2 r^2.
  EXPECT_NEAR(h.front(), 2.0, 0.02);
}

TEST(Centers, SectorialRate) {
  const CenterTrace ct = rescaled_center_orbit(Oval(Circle{1.0}), Vec2{1e3, 0.0}, 50);
  const SectorialRates cs = sectorial_rate(Oval(Circle{1.0}), ct);
  for (std::size_t i = 0; i < cs.rate.size(); ++i) {
    EXPECT_NEAR(cs.reference[i], 1e9, 1e-3 * 1e9);
    EXPECT_NEAR(cs.rate[i] / 1e9, 1.0, 1e-3);
  }
  const Oval table(Ellipse{2.0, 1.0});
  const SectorialRates s = sectorial_rate(table, rescaled_center_orbit(table, Vec2{1e3, 0.0}, 300));
  for (std::size_t i = 0; i < s.rate.size(); ++i) EXPECT_NEAR(s.rate[i] / s.reference[i], 1.0, 0.02);
  CenterTrace one;
  one.records.resize(1);
  EXPECT_THROW(sectorial_rate(table, one), Error);
}

TEST(Centers, KeplerLawForOuterAreaBilliard) {
  const Oval table(Ellipse{2.0, 1.0});
  EXPECT_LT(spread(kepler_rates(table, Vec2{1e3, 0.0}, 400)), 0.02);
  const auto pts = outer_area_orbit(table, Vec2{1e3, 0.0}, 10);
  EXPECT_EQ(pts.size(), 11u);
}

TEST(Centers, LpTraceHasTheLevelSetShape) {
  const Oval lp = parse_table("lp:p=1.5");
  const CenterTrace tr = rescaled_center_orbit(lp, lp.origin() + Vec2{1e3, 0.0}, 4000);
  std::vector<Vec2> pts;
  for (const auto& rec : tr.records) pts.push_back(rec.rescaled);
  EXPECT_LT(level_set_distance(lp, pts, 2.0), 0.01);
  EXPECT_THROW(level_set_distance(lp, {}, 2.0), Error);
}

TEST(Centers, CentreTraceAndOuterAreaOrbitShareALevelSet) {
  // The lp(3/2) ball is symmetric under a quarter turn, so the two shapes can
  // be compared directly after scaling the outer-area orbit to level 2.
  const Oval lp = parse_table("lp:p=1.5");
  const auto orbit_pts = outer_area_orbit(lp, lp.origin() + Vec2{1e3, 0.0}, 4000);
  double mean = 0.0;
  for (const Vec2& p : orbit_pts) mean += ham_level(lp, p) / orbit_pts.size();
  std::vector<Vec2> scaled;
  for (const Vec2& p : orbit_pts) scaled.push_back((p - lp.origin()) * (2.0 / mean));
  EXPECT_LT(level_set_distance(lp, scaled, 2.0), 0.01);
}

TEST(Centers, EllipseCenterLocus) {
  const Oval table(Ellipse{2.0, 1.0});
  for (int m : {1, 2}) EXPECT_LT(ellipse_center_locus(table, find_periodic(table, 5, m)), 1e-6);
  const Oval circle(Circle{1.0});
  EXPECT_LT(ellipse_center_locus(circle, find_periodic(circle, 5, 2)), 1e-10);
  try {
    ellipse_center_locus(table, jitter(find_periodic(table, 5, 1), 1e-3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPeriodic);
  }
  EXPECT_THROW(ellipse_center_locus(parse_table("lp:p=1.5"), find_periodic(table, 5, 1)), Error);
}

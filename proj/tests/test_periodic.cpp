#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "olb/degenerate.hpp"
#include "olb/error.hpp"
#include "olb/olbmap.hpp"
#include "olb/periodic.hpp"

using namespace olb;

TEST(Periodic, CircleRegularPolygons) {
  const Oval circle(Circle{1.0});
  // Oracle: a regular k-gon winding m times around the unit circle has its
  // vertices at distance 1/cos(m pi / k).
  const PeriodicOrbit tri = find_periodic(circle, 3, 1);
  for (const Vec2& v : tri.vertices) EXPECT_NEAR(norm(v), 2.0, 1e-8);
  const PeriodicOrbit star = find_periodic(circle, 5, 2);
  for (const Vec2& v : star.vertices) EXPECT_NEAR(norm(v), 1.0 / std::cos(2 * kPi / 5), 1e-8);
  EXPECT_NEAR(norm(star.vertices[0]), 3.2361, 1e-4);
  EXPECT_LT(verify_periodic(circle, star), 1e-10);
}

TEST(Periodic, OrbitInvariants) {
  const Oval table(Ellipse{2.0, 1.0});
  for (int m : {1, 2}) {
    const PeriodicOrbit orb = find_periodic(table, 5, m);
    ASSERT_EQ(orb.alphas.size(), 5u);
    for (std::size_t i = 0; i + 1 < orb.alphas.size(); ++i) EXPECT_GT(orb.alphas[i + 1], orb.alphas[i]);
    EXPECT_LT(orb.alphas.back() - orb.alphas.front(), kTwoPi * m);
    EXPECT_LT(orb.residual, 1e-9);
    EXPECT_LT(verify_periodic(table, orb), 1e-7);
    // Perimeter equals the sum of H over consecutive tangency pairs.
    double h = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      const double a = orb.alphas[i];
      const double b = i + 1 < 5 ? orb.alphas[i + 1] : orb.alphas[0] + kTwoPi * m;
      h += generating(table, a, b).value;
    }
    EXPECT_NEAR(orb.perimeter, h, 1e-12);
    // All vertices on one confocal ellipse.
    double lo = 1e9, hi = -1e9;
    for (const Vec2& v : orb.vertices) {
      lo = std::min(lo, focal_sum(table, v));
      hi = std::max(hi, focal_sum(table, v));
      EXPECT_GT(clearance(table, v), 0.0);
    }
    EXPECT_LT(hi - lo, 1e-8);
  }
}

TEST(Periodic, JitterBreaksPeriodicity) {
  const Oval table(Ellipse{2.0, 1.0});
  const PeriodicOrbit orb = find_periodic(table, 5, 1);
  EXPECT_GT(verify_periodic(table, jitter(orb, 1e-3, 42)), 1e-4);
  // Seeded: the same seed gives the same perturbation.
  EXPECT_EQ(jitter(orb, 1e-3, 42).vertices[2], jitter(orb, 1e-3, 42).vertices[2]);
}

TEST(Periodic, InvalidArguments) {
  const Oval circle(Circle{1.0});
  EXPECT_THROW(find_periodic(circle, 2, 1), Error);
  EXPECT_THROW(find_periodic(circle, 6, 3), Error);
  EXPECT_THROW(find_periodic(circle, 5, 0), Error);
  EXPECT_THROW(period_radius_scan(circle, 2), Error);
}

TEST(PeriodScan, CircleMatchesStarPolygons) {
  // Oracle: over all admissible m the largest radius is 1/cos(m pi / k) at
  // the largest m below k/2.
  const PeriodScan scan = period_radius_scan(Oval(Circle{1.0}), 9, false);
  for (int k = 3; k <= 9; ++k) {
    const int m = (k - 1) / 2;
    ASSERT_TRUE(scan.max_radius_by_k[k].has_value()) << k;
    EXPECT_NEAR(*scan.max_radius_by_k[k], 1.0 / std::cos(m * kPi / k), 1e-8) << k;
  }
  EXPECT_NEAR(*scan.max_radius_by_k[3], 2.0, 1e-8);
  // Growth is close to 2k/pi for large k.
  EXPECT_NEAR(*scan.max_radius_by_k[9] / (2 * 9 / kPi), 1.0, 0.05);
}

TEST(PeriodScan, EllipseGrowsWithinEachParity) {
  // With every m admitted, the largest radius grows along odd k and along
  // even k; across parities it need not (the nearest-to-half rotation
  // number differs), see the README.
  const PeriodScan scan = period_radius_scan(Oval(Ellipse{2.0, 1.0}), 9, false);
  for (const auto& c : scan.cells) EXPECT_TRUE(c.max_radius.has_value()) << c.k << "/" << c.m << " " << c.failure;
  for (int k = 5; k <= 9; ++k) {
    EXPECT_GE(*scan.max_radius_by_k[k], *scan.max_radius_by_k[k - 2]) << k;
  }
  const PeriodScan coprime = period_radius_scan(Oval(Ellipse{2.0, 1.0}), 6, true);
  for (const auto& c : coprime.cells) EXPECT_EQ(std::gcd(c.k, c.m), 1);
}

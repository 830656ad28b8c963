#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "olb/degenerate.hpp"
#include "olb/error.hpp"
#include "olb/olbmap.hpp"

using namespace olb;

namespace {

Vec2 random_exterior(std::mt19937_64& rng, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> ur(r_lo, r_hi), ua(0.0, kTwoPi);
  const double r = ur(rng);
  return r * direction(ua(rng));
}

// Distance from p to the line through a and b.
double line_distance(Vec2 p, Vec2 a, Vec2 b) { return std::abs(cross(b - a, p - a)) / norm(b - a); }

}  // namespace

TEST(AuxCircle, CircleTableClosedForm) {
  // Oracle: for A = (R, 0) the positive tangency is x' = (1/R, sqrt(1 - 1/R^2)).
  // A circle centred at (1 + s) x' touching the line Ax (normal n_x, offset 1)
  // needs |(1 + s) cos 2t - 1| = s with cos t = 1/R; the positive root is
  // s = tan^2 t = R^2 - 1, so the centre is R^2 x'.
  const Oval table(Circle{1.0});
  for (double R : {1.5, 2.0, 5.0, 10.0}) {
    const double t = std::acos(1.0 / R);
    const AuxCircle c = aux_circle(table, Vec2{R, 0.0});
    EXPECT_NEAR(c.radius, R * R - 1.0, 1e-8 * R * R);
    EXPECT_LT(distance(c.center, R * R * direction(t)), 1e-8 * R * R);
  }
}

TEST(AuxCircle, TangencyResidualsOnEllipse) {
  const Oval table(Ellipse{2.0, 1.0});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Vec2 A = random_exterior(rng, 2.5, 40.0);
    const TangentFan fan = tangent_fan(table, A);
    const AuxCircle c = aux_circle(table, fan);
    const double scale = std::max(1.0, c.radius);
    EXPECT_NEAR(distance(c.center, c.tangency.position), c.radius, 1e-12 * scale);
    EXPECT_NEAR(cross(c.center - c.tangency.position, direction(c.tangency.alpha)), 0.0, 1e-10 * scale);
    EXPECT_NEAR(line_distance(c.center, A, fan.neg.position), c.radius, 1e-10 * scale);
  }
}

TEST(AuxCircle, InteriorApex) {
  try {
    aux_circle(Oval(Ellipse{2.0, 1.0}), Vec2{0.5, 0.1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointInsideCurve);
  }
}

TEST(Step, CircleIsRotation) {
  const Oval table(Circle{1.0});
  // R = 2 turns by 2 acos(1/2) = 2 pi / 3.
  const Vec2 img = apply(table, Vec2{2.0, 0.0});
  EXPECT_LT(distance(img, 2.0 * direction(kTwoPi / 3)), 1e-9);
  for (double R : {1.5, 5.0, 100.0}) {
    for (double th : {0.0, 1.0, 4.0}) {
      EXPECT_LT(distance(apply(table, R * direction(th)), R * direction(th + 2 * std::acos(1 / R))), 1e-9 * R);
    }
  }
}

TEST(Step, StructureInvariants) {
  const Oval table = parse_table("fourier:c0=1,a2=0.05,b3=0.02");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Vec2 A = table.origin() + random_exterior(rng, 1.5, 60.0);
    const MapStep s = step(table, A);
    const double scale = std::max(1.0, norm(A));
    EXPECT_LT(line_distance(s.image, A, s.fan.pos.position), 1e-10 * scale);
    EXPECT_NEAR(dot(s.image - s.exit.position, direction(s.exit.alpha)), 0.0, 1e-10 * scale);
    EXPECT_NEAR(dot(s.circle.center - s.exit.position, direction(s.exit.alpha)), -s.circle.radius,
                1e-10 * std::max(1.0, s.circle.radius));
    // The image lies beyond x' on the ray from A.
    EXPECT_GT(dot(s.image - s.fan.pos.position, s.fan.pos.position - A), 0.0);
  }
}

TEST(Step, ConfocalInvariance) {
  const Oval table(Ellipse{2.0, 1.0});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Vec2 A = random_exterior(rng, 2.5, 40.0);
    EXPECT_LT(confocal_residual(table, A), 1e-8);
  }
}

TEST(Step, DoubleStepIsBounded) {
  for (const char* spec : {"ellipse:a=2,b=1", "lp:p=1.5", "fourier:c0=1,a2=0.05,b3=0.02"}) {
    const Oval table = parse_table(spec);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      const Vec2 A = table.origin() + random_exterior(rng, 2.5, 500.0);
      EXPECT_LE(distance(apply_twice(table, A), A), 5.0 * table.diameter()) << spec;
    }
  }
}

TEST(Variational, CircleKeepsEqualSpacing) {
  const Oval table(Circle{1.0});
  for (double gap : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(step_variational(table, 0.2, 0.2 + gap), 0.2 + 2 * gap, 1e-10);
  }
}

TEST(Variational, AgreesWithGeometricStep) {
  const Oval table(Ellipse{2.0, 1.0});
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Vec2 A = random_exterior(rng, 2.2, 50.0);
    const MapStep s = step(table, A);
    const double a0 = s.fan.neg.alpha;
    const double a1 = a0 + wrap_positive(s.fan.pos.alpha - a0);
    const double geometric = a1 + wrap_positive(s.exit.alpha - a1);
    EXPECT_NEAR(step_variational(table, a0, a1), geometric, 1e-8);
  }
}

TEST(Variational, DegenerateGap) {
  EXPECT_THROW(step_variational(Oval(Circle{1.0}), 0.0, kPi), Error);
}

TEST(Generating, CircleClosedForm) {
  // Oracle: tangents at normal angles 0 and 2t meet at distance 1/cos t from
  // the centre; each tangent segment has length tan t.
  const Oval table(Circle{1.0});
  for (double t : {0.1, 0.5, 1.2}) {
    const GeneratingEval e = generating(table, 0.4, 0.4 + 2 * t);
    EXPECT_NEAR(e.value, 2 * std::tan(t), 1e-12);
    EXPECT_LT(e.d12, 0.0);
  }
}

TEST(Generating, ParallelTangents) {
  try {
    generating(Oval(Circle{1.0}), 0.0, kPi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParallelTangents);
  }
  EXPECT_THROW(generating(Oval(Circle{1.0}), 1.0, 0.5), Error);
}

TEST(Generating, RelationHoldsAlongOrbits) {
  for (const char* spec : {"ellipse:a=2,b=1", "fourier:c0=1,a2=0.05,b3=0.02"}) {
    const Oval table = parse_table(spec);
    Vec2 A = table.origin() + Vec2{7.0, 3.0};
    for (int i = 0; i < 100; ++i) {
      const MapStep s = step(table, A);
      const double a0 = s.fan.neg.alpha;
      const double a1 = a0 + wrap_positive(s.fan.pos.alpha - a0);
      const double a2 = a1 + wrap_positive(s.exit.alpha - a1);
      EXPECT_LT(std::abs(generating_relation_residual(table, a0, a1, a2)), 1e-8) << spec;
      EXPECT_LT(generating(table, a0, a1).d12, 0.0);
      A = s.image;
    }
  }
}

TEST(AreaForm, CircleFactorIsTwo) {
  // Oracle: on the unit circle cot(phi/2) = |Ax| = sqrt(R^2 - 1), so
  // C_A = |Ax| * 2/|Ax| = 2.
  const Oval table(Circle{1.0});
  for (double R : {1.2, 3.0, 50.0}) EXPECT_NEAR(area_form_factor(table, R * direction(0.7)), 2.0, 1e-10);
}

TEST(AreaForm, InvarianceResidual) {
  const Oval circle(Circle{1.0});
  EXPECT_LT(form_invariance_residual(circle, Vec2{3.0, 1.0}, 1e-5), 1e-8);
  const Oval table(Ellipse{2.0, 1.0});
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const Vec2 A = random_exterior(rng, 2.5, 20.0);
    EXPECT_LT(form_invariance_residual(table, A, 1e-4), 1e-4);
    EXPECT_LT(form_invariance_residual(table, A, 5e-5), 1e-4);
    EXPECT_GT(area_form_factor(table, A), 0.0);
  }
}

TEST(Commute, ConcentricCirclesAndSelf) {
  const Oval c1(Circle{1.0}), c2(Circle{2.0}), e(Ellipse{2.0, 1.0});
  EXPECT_LT(commute_gap(c1, c2, Vec2{5.0, 2.0}), 1e-10);
  EXPECT_LT(commute_gap(e, e, Vec2{5.0, 2.0}), 1e-10);
  const Oval e2(Ellipse{std::sqrt(5.0), std::sqrt(2.0)});
  EXPECT_GT(commute_gap(e, e2, Vec2{5.0, 2.0}), 1e-3);
}

TEST(Orbit, CircleOrbitStaysOnCircle) {
  const auto pts = orbit(Oval(Circle{1.0}), Vec2{3.0, 0.0}, 200, 1);
  ASSERT_EQ(pts.size(), 201u);
  for (const Vec2& p : pts) EXPECT_NEAR(norm(p), 3.0, 1e-9);
  EXPECT_EQ(orbit(Oval(Circle{1.0}), Vec2{3.0, 0.0}, 10, 2).size(), 11u);
}

TEST(Orbit, FailureCarriesStepIndex) {
  try {
    orbit(Oval(Circle{1.0}), Vec2{0.2, 0.0}, 5);
    FAIL();
  } catch (const OrbitError& e) {
    EXPECT_EQ(e.index(), 0u);
    EXPECT_EQ(e.code(), ErrorCode::PointInsideCurve);
  }
  EXPECT_THROW(orbit(Oval(Circle{1.0}), Vec2{3.0, 0.0}, 5, 3), Error);
}

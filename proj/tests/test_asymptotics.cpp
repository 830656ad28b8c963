#include <gtest/gtest.h>

#include <cmath>

#include "olb/asymptotics.hpp"
#include "olb/error.hpp"
#include "olb/olbmap.hpp"

using namespace olb;

TEST(FieldX, CircleSpeedAndDirection) {
  const RadialField X = field_X(Oval(Circle{1.0}));
  for (double a : {0.0, 1.0, 3.0}) {
    const Vec2 x = 10.0 * direction(a);
    EXPECT_NEAR(norm(X.at(x)), 4.0, 1e-14);
    EXPECT_NEAR(dot(X.at(x), x), 0.0, 1e-12);
  }
}

TEST(FieldX, SpeedIsTwiceTheWidth) {
  const Oval table = parse_table("fourier:c0=1,a2=0.05,b3=0.02");
  const RadialField X = field_X(table);
  for (int i = 0; i < 64; ++i) {
    const double a = kTwoPi * i / 64;
    EXPECT_NEAR(norm(X.at(table.origin() + 50.0 * direction(a))) / width(table, a), 2.0, 1e-13);
  }
}

TEST(FieldX, DegreeZeroHomogeneity) {
  const Oval table(Ellipse{2.0, 1.0});
  const RadialField X = field_X(table, {0, 0});
  const Vec2 x{3.0, 7.0};
  for (double c : {2.0, 10.0}) {
    EXPECT_EQ(X.at(c * x).x, X.at(x).x);
    EXPECT_EQ(X.at(c * x).y, X.at(x).y);
  }
  EXPECT_THROW(X.at({0, 0}), Error);
}

TEST(FieldX, OriginShiftCostsOneOverR) {
  // Moving the origin by an interior vector changes X by O(1/|x|).
  const Oval table(Ellipse{2.0, 1.0});
  const RadialField X0 = field_X(table, {0, 0}), X1 = field_X(table, {0.5, -0.3});
  double scaled[2];
  for (int k = 0; k < 2; ++k) {
    const double r = k == 0 ? 1e2 : 1e3;
    double s = 0.0;
    for (int i = 0; i < 32; ++i) {
      const Vec2 x = r * direction(kTwoPi * i / 32 + 0.05);
      s = std::max(s, norm(X0.at(x) - X1.at(x)) * r);
    }
    scaled[k] = s;
  }
  EXPECT_GT(scaled[0], 0.0);
  EXPECT_NEAR(scaled[1] / scaled[0], 1.0, 0.1);
}

TEST(FieldY, Speed) {
  const RadialField Y = field_Y();
  EXPECT_NEAR(norm(Y.at({0.0, 50.0})), 4.0, 1e-14);
  EXPECT_NEAR(norm(Y.at({50.0, 0.0})), 0.0, 1e-14);
}

TEST(Flow, CircleRotatesByFourOverR) {
  const Oval table(Circle{1.0});
  for (double r : {10.0, 100.0, 1000.0}) {
    const Vec2 y = flow_time1(table, r * direction(0.3));
    EXPECT_NEAR(wrap_angle(polar_angle(y) - 0.3), -4.0 / r, 1e-12);
  }
}

TEST(Flow, KeepsRadius) {
  const Oval table(Ellipse{2.0, 1.0});
  const Vec2 o = table.origin();
  for (double r : {30.0, 80.0, 1e4}) {
    EXPECT_NEAR(norm(flow_time1(table, o + r * direction(0.9)) - o), r, 1e-14 * r);
  }
  EXPECT_THROW(flow_time1(table, o), Error);
}

TEST(Flow, AngleHalvesWhenRadiusDoubles) {
  // Speed 2w at radius r gives angular rate 2w/r; with constant w the angle
  // swept in unit time is exactly inverse to r.
  const Oval table(Circle{1.0});
  const double d1 = wrap_angle(polar_angle(flow_time1(table, 50.0 * direction(0.2))) - 0.2);
  const double d2 = wrap_angle(polar_angle(flow_time1(table, 100.0 * direction(0.2))) - 0.2);
  EXPECT_NEAR(d2, 0.5 * d1, 1e-12);
}

TEST(Flow, MatchesExplicitIntegrator) {
  // Oracle: classical RK4 on dalpha/dt = -2 w(alpha) / r with 10^4 steps.
  const Oval table(Ellipse{2.0, 1.0});
  const double r = 100.0, a0 = 0.4;
  auto rhs = [&](double a) { return -2.0 * width(table, a) / r; };
  double a = a0;
  constexpr int kSteps = 10000;
  const double h = 1.0 / kSteps;
  for (int i = 0; i < kSteps; ++i) {
    const double k1 = rhs(a), k2 = rhs(a + 0.5 * h * k1), k3 = rhs(a + 0.5 * h * k2), k4 = rhs(a + h * k3);
    a += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  const Vec2 y = flow_time1(table, table.origin() + r * direction(a0));
  EXPECT_NEAR(wrap_angle(polar_angle(y - table.origin()) - a), 0.0, 1e-9);
}

TEST(Main1, CircleResidualClosedForm) {
  // Oracle: F^2 turns by 4 acos(1/r) and Phi by -4/r; the residual is the
  // chord 2 r sin(|d|/2) with d = 4 acos(1/r) - 2 pi + 4/r.
  const Oval table(Circle{1.0});
  for (double r : {20.0, 100.0, 500.0}) {
    const double d = 4.0 * std::acos(1.0 / r) - kTwoPi + 4.0 / r;
    const double expected = 2.0 * r * std::sin(0.5 * std::abs(d));
    EXPECT_NEAR(main1_residual(table, r * direction(1.1)), expected, 1e-10 * r) << r;
  }
}

TEST(Main1, DecayFitOfExactPowerLaw) {
  AsymptoticReport rep;
  rep.radii = {10, 20, 40, 80};
  for (double r : rep.radii) rep.sup_residual.push_back(3.0 / r);
  const DecayFit fit = decay_fit(rep);
  EXPECT_NEAR(fit.slope, -1.0, 1e-6);
  EXPECT_NEAR(fit.c_hat, 3.0, 1e-12);
  rep.radii.resize(2);
  rep.sup_residual.resize(2);
  try {
    decay_fit(rep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewPoints);
  }
}

TEST(Main1, CircleDecaysLikeInverseSquare) {
  const DecayFit fit = decay_fit(main1_report(Oval(Circle{1.0}), {50, 100, 200, 400}, 8));
  EXPECT_NEAR(fit.slope, -2.0, 0.05);
}

TEST(Main1, GenericTableDecaysLikeInverseR) {
  // Without central symmetry the 1/r term of the residual survives.
  const AsymptoticReport rep = main1_report(parse_table("fourier:c0=1,a2=0.05,b3=0.02"), {50, 100, 200, 400}, 32);
  const DecayFit fit = decay_fit(rep);
  EXPECT_GE(fit.slope, -1.3);
  EXPECT_LE(fit.slope, -0.8);
  EXPECT_LT((fit.c_hat - fit.c_min) / fit.c_hat, 0.25);
}

TEST(Stability, CircleOrbitIsExact) {
  const StabilityScan s = stability_scan(Oval(Circle{1.0}), Vec2{40.0, 0.0}, 1000);
  EXPECT_LT(s.r_max - s.r_min, 1e-8);
  EXPECT_EQ(s.steps, 1000u);
}

TEST(Stability, ShortEllipseRun) {
  const Oval table(Ellipse{2.0, 1.0});
  const StabilityScan s = stability_scan(table, Vec2{50.0, 0.0}, 2000);
  EXPECT_LT(s.r_max - 50.0, 5.0);
  EXPECT_GT(s.r_min - 50.0, -5.0);
  EXPECT_LE(s.max_jump, 5.0 * table.diameter());
}

TEST(Infinity, CircleCoefficient) {
  // Oracle: one step turns by 2 acos(rho) = pi - 2 rho + O(rho^3).
  const InfinityCoeffs c = infinity_expansion(Oval(Circle{1.0}), 0.7);
  EXPECT_NEAR(c.f, -2.0, 1e-6);
  EXPECT_NEAR(c.g, 0.0, 1e-6);
}

TEST(Infinity, NegativeFAndDoubleStepConsistency) {
  const Oval table = parse_table("fourier:c0=1,a2=0.05,b3=0.02");
  const InfinityChart one = infinity_chart(table, 64, 1);
  const InfinityChart two = infinity_chart(table, 64, 2);
  for (std::size_t i = 0; i < 64; ++i) {
    EXPECT_LT(one.f[i], 0.0);
    // Two single steps compose to the double step, whose rate is the field
    // X: f(a) + f(a + pi) = f2(a) = -2 w(a).
    EXPECT_NEAR(one.f[i] + one.f[(i + 32) % 64], -2.0 * width(table, one.alphas[i]), 1e-4);
    EXPECT_NEAR(two.f[i], -2.0 * width(table, two.alphas[i]), 1e-4);
  }
}

TEST(Lazutkin, ConstantCoefficients) {
  std::vector<double> u, f, g;
  for (int i = 0; i <= 16; ++i) {
    u.push_back(kTwoPi * i / 16);
    f.push_back(-2.0);
    g.push_back(0.0);
  }
  const LazutkinTables t = lazutkin_change(u, f, g);
  for (std::size_t i = 0; i < u.size(); ++i) {
    EXPECT_NEAR(t.b[i], 1.0, 1e-15);
    EXPECT_NEAR(t.a[i], -0.5 * u[i], 1e-14);
  }
  f[3] = 1e-9;
  try {
    lazutkin_change(u, f, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularF);
  }
}

TEST(Lazutkin, NormalFormDefectsStayBounded) {
  const Oval table(Ellipse{2.0, 1.0});
  const InfinityChart two = infinity_chart(table, 32, 2);
  std::vector<double> u = two.alphas, f = two.f, g = two.g;
  u.push_back(kTwoPi);
  f.push_back(f.front());
  g.push_back(g.front());
  const LazutkinTables lz = lazutkin_change(u, f, g);
  for (std::size_t i = 0; i < 32; i += 4) {
    const NormalFormSample s0 = normal_form_sample(table, u[i], lz.b[i], 1e-3);
    const NormalFormSample s1 = normal_form_sample(table, u[i], lz.b[i], 5e-4);
    EXPECT_NEAR(s0.y, lz.b[i] * 1e-3, 1e-18);
    EXPECT_LT(s1.x_defect, 2.0 * std::max(s0.x_defect, 1e-3));
    EXPECT_LT(s1.y_defect, 2.0 * std::max(s0.y_defect, 1e-3));
  }
}

TEST(OuterArea, MidpointAndCircleSymmetry) {
  const Oval table = parse_table("fourier:c0=1,a2=0.05,b3=0.02");
  const Vec2 x{6.0, -2.0};
  const Vec2 z = outer_area_billiard_step(table, x);
  EXPECT_LT(distance(tangent_fan(table, x).pos.position, 0.5 * (x + z)), 1e-12);
  EXPECT_NEAR(norm(outer_area_billiard_step(Oval(Circle{1.0}), x)), norm(x), 1e-12);
  EXPECT_THROW(outer_area_billiard_step(table, Vec2{0.1, 0.0}), Error);
}

TEST(OuterArea, ThinTableDoubleStepTranslates) {
  // A segment of length 2: the double step reflects in one endpoint and then
  // the other, a translation by twice the segment length.
  const Oval thin(Ellipse{1.0, 1e-6});
  const Vec2 x{0.3, 25.0};
  const Vec2 z = outer_area_billiard_step(thin, outer_area_billiard_step(thin, x));
  EXPECT_NEAR(distance(z, x), 4.0, 1e-3);
  EXPECT_NEAR(z.y, x.y, 1e-3);
}

#include "olb/asymptotics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "olb/error.hpp"
#include "olb/numerics.hpp"
#include "olb/olbmap.hpp"

namespace olb {

namespace {

struct Polar {
  double r;
  double alpha;
};

Polar polar_about(Vec2 origin, Vec2 x) {
  const Vec2 d = x - origin;
  const double r = norm(d);
  if (r == 0.0) throw Error(ErrorCode::AtOrigin, "point coincides with the origin");
  return {r, polar_angle(d)};
}

// Two halvings of rho; the estimates carry an O(rho) error term.
double richardson(const double e[3]) {
  const double r1a = 2.0 * e[1] - e[0];
  const double r1b = 2.0 * e[2] - e[1];
  if (std::abs(r1b - r1a) > 1e-3 * std::max(std::abs(r1b), 1.0)) {
    throw Error(ErrorCode::ExtrapolationUnstable,
                fmt::format("first-order extrapolants {} and {} disagree", r1a, r1b));
  }
  return (4.0 * r1b - r1a) / 3.0;
}

}  // namespace

Vec2 RadialField::at(Vec2 x) const {
  const Polar pc = polar_about(origin, x);
  // -(s/r) d/dalpha has Cartesian components -s * (-sin, cos).
  return -angular_speed(pc.alpha) * tangent_dir(pc.alpha);
}

RadialField field_X(const Oval& oval, Vec2 origin) {
  return {origin, [oval](double a) { return 2.0 * width(oval, a); }};
}

RadialField field_Y() {
  return {{0.0, 0.0}, [](double a) { return 4.0 * std::abs(std::sin(a)); }};
}

Vec2 flow_time1(const Oval& oval, Vec2 x) {
  const Vec2 o = oval.origin();
  const Polar pc = polar_about(o, x);
  // dalpha/dt = -2 w / r, so the flow for unit time sweeps the angle interval
  // [alpha_new, alpha] with int dtheta / w = 2 / r.
  const double target = 2.0 / pc.r;
  auto inv_w = [&oval](double t) { return 1.0 / width(oval, t); };
  auto g = [&](double b) {
    return num::Jet{num::integrate(inv_w, b, pc.alpha) - target, -inv_w(b)};
  };
  const double lo = pc.alpha - 1.01 * target * oval.diameter();
  num::RootOptions opts;
  opts.ftol = 1e-14 * target;
  opts.max_iter = 100;
  const double b = num::solve_bracketed(g, lo, pc.alpha, opts).x;
  return o + pc.r * direction(b);
}

double main1_residual(const Oval& oval, Vec2 x) {
  return distance(apply_twice(oval, x), flow_time1(oval, x));
}

AsymptoticReport main1_report(const Oval& oval, const std::vector<double>& radii, std::size_t directions) {
  AsymptoticReport rep;
  rep.radii = radii;
  rep.directions = directions;
  const std::size_t cells = radii.size() * directions;
  const auto res = num::parallel_map<double>(cells, [&](std::size_t i) {
    const double r = radii[i / directions];
    const double a = kTwoPi * static_cast<double>(i % directions) / static_cast<double>(directions);
    return main1_residual(oval, oval.origin() + r * direction(a));
  });
  rep.sup_residual.assign(radii.size(), 0.0);
  for (std::size_t i = 0; i < cells; ++i) {
    double& s = rep.sup_residual[i / directions];
    s = std::max(s, res[i]);
  }
  return rep;
}

DecayFit decay_fit(const AsymptoticReport& report) {
  const std::size_t n = report.radii.size();
  if (n < 3 || report.sup_residual.size() != n) {
    throw Error(ErrorCode::TooFewPoints, fmt::format("decay fit needs at least 3 radii, got {}", n));
  }
  std::vector<double> lx(n), ly(n);
  DecayFit fit;
  fit.c_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(report.radii[i]);
    ly[i] = std::log(report.sup_residual[i]);
    const double c = report.radii[i] * report.sup_residual[i];
    fit.c_hat = std::max(fit.c_hat, c);
    fit.c_min = std::min(fit.c_min, c);
  }
  fit.slope = num::linear_fit(lx, ly).first;
  return fit;
}

StabilityScan stability_scan(const Oval& oval, Vec2 x0, std::size_t n) {
  StabilityScan s;
  const Vec2 o = oval.origin();
  s.r_min = s.r_max = distance(x0, o);
  Vec2 cur = x0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 next;
    try {
      next = apply_twice(oval, cur);
    } catch (const Error& e) {
      throw OrbitError(i, e);
    }
    s.max_jump = std::max(s.max_jump, distance(next, cur));
    const double r = distance(next, o);
    s.r_min = std::min(s.r_min, r);
    s.r_max = std::max(s.r_max, r);
    cur = next;
    ++s.steps;
  }
  return s;
}

InfinityCoeffs infinity_expansion(const Oval& oval, double alpha, int steps) {
  if (steps != 1 && steps != 2) throw Error(ErrorCode::InvalidArgument, "steps must be 1 or 2");
  const Vec2 o = oval.origin();
  const double shift = steps == 1 ? kPi : 0.0;
  double ef[3], eg[3];
  for (int i = 0; i < 3; ++i) {
    const double rho = kChartRhos[i];
    const double r = 1.0 / rho;
    Vec2 y = o + r * direction(alpha);
    for (int s = 0; s < steps; ++s) y = apply(oval, y);
    const Polar pc = polar_about(o, y);
    ef[i] = wrap_angle(pc.alpha - alpha - shift) / rho;
    // rho' - rho = (r - r') / (r r')
    eg[i] = (r - pc.r) / (r * pc.r) / (rho * rho);
  }
  return {richardson(ef), richardson(eg)};
}

InfinityChart infinity_chart(const Oval& oval, std::size_t n, int steps) {
  InfinityChart chart;
  chart.steps = steps;
  chart.alphas.resize(n);
  for (std::size_t i = 0; i < n; ++i) chart.alphas[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
  const auto coeffs = num::parallel_map<InfinityCoeffs>(
      n, [&](std::size_t i) { return infinity_expansion(oval, chart.alphas[i], steps); });
  for (const auto& c : coeffs) {
    chart.f.push_back(c.f);
    chart.g.push_back(c.g);
  }
  return chart;
}

LazutkinTables lazutkin_change(const std::vector<double>& u, const std::vector<double>& f,
                               const std::vector<double>& g) {
  const std::size_t n = u.size();
  if (f.size() != n || g.size() != n || n < 2) {
    throw Error(ErrorCode::InvalidArgument, "coefficient tables must share a grid of at least 2 nodes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(f[i]) >= 1e-8)) {
      throw Error(ErrorCode::SingularF, fmt::format("|f| = {} at u = {}", std::abs(f[i]), u[i]));
    }
  }
  LazutkinTables t;
  t.u = u;
  t.a.assign(n, 0.0);
  t.b.assign(n, 1.0);
  double log_b = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double h = u[i] - u[i - 1];
    log_b -= 0.5 * h * (g[i - 1] / f[i - 1] + g[i] / f[i]);
    t.b[i] = std::exp(log_b);
    t.a[i] = t.a[i - 1] + 0.5 * h * (t.b[i - 1] / f[i - 1] + t.b[i] / f[i]);
  }
  return t;
}

NormalFormSample normal_form_sample(const Oval& oval, double u, double b_u, double rho) {
  const Vec2 o = oval.origin();
  const double r = 1.0 / rho;
  const Polar img = polar_about(o, apply_twice(oval, o + r * direction(u)));
  const double u1 = u + wrap_angle(img.alpha - u);
  const double rho1 = 1.0 / img.r;
  const double um = 0.5 * (u + u1);

  // Simpson rules over the short interval [u, u']; b between nodes follows
  // b' = -b g / f.
  const InfinityCoeffs c0 = infinity_expansion(oval, u, 2);
  const InfinityCoeffs cm = infinity_expansion(oval, um, 2);
  const InfinityCoeffs c1 = infinity_expansion(oval, u1, 2);
  const double q0 = c0.g / c0.f, qm = cm.g / cm.f, q1 = c1.g / c1.f;
  const double du = u1 - u;
  const double bm = b_u * std::exp(-0.25 * du * (q0 + qm));
  const double b1 = b_u * std::exp(-du / 6.0 * (q0 + 4.0 * qm + q1));
  const double dx = du / 6.0 * (b_u / c0.f + 4.0 * bm / cm.f + b1 / c1.f);

  NormalFormSample s;
  s.rho = rho;
  s.y = b_u * rho;
  s.x_defect = std::abs(dx - s.y) / (s.y * s.y);
  // rho' b(u') - rho b(u), with rho' - rho formed without cancellation.
  const double drho = (r - img.r) / (r * img.r);
  const double dy = (b1 - b_u) * rho1 + b_u * drho;
  s.y_defect = std::abs(dy) / (s.y * s.y * s.y);
  return s;
}

Vec2 outer_area_billiard_step(const Oval& oval, Vec2 x) {
  const TangentFan fan = tangent_fan(oval, x);
  return 2.0 * fan.pos.position - x;
}

}  // namespace olb

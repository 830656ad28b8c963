#include "olb/centers.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

#include "olb/asymptotics.hpp"
#include "olb/error.hpp"
#include "olb/olbmap.hpp"

namespace olb {

namespace {

double ham_level_rel(const Oval& oval, Vec2 d) {
  const double r = norm(d);
  if (r == 0.0) throw Error(ErrorCode::AtOrigin, "ham_level is undefined at the origin");
  return r * width(oval, polar_angle(d) + 0.5 * kPi);
}

}  // namespace

Vec2 circle_center(const Oval& oval, Vec2 x) { return aux_circle(oval, x).center; }

CenterTrace rescaled_center_orbit(const Oval& oval, Vec2 x0, std::size_t n, bool odd) {
  const Vec2 o = oval.origin();
  CenterTrace trace;
  trace.records.reserve(n);
  Vec2 x = x0;
  std::size_t step_index = 0;
  auto advance = [&] {
    try {
      x = apply(oval, x);
    } catch (const Error& e) {
      throw OrbitError(step_index, e);
    }
    ++step_index;
  };
  if (odd) advance();
  for (std::size_t i = 0; i < n; ++i) {
    CenterRecord rec;
    rec.step = step_index;
    try {
      rec.center = circle_center(oval, x);
    } catch (const Error& e) {
      throw OrbitError(step_index, e);
    }
    const Vec2 dc = rec.center - o;
    const Vec2 dx = x - o;
    rec.big_r = norm(dc);
    rec.beta = polar_angle(dc);
    rec.r = norm(dx);
    rec.alpha = polar_angle(dx);
    rec.rescaled = dc / (rec.r * rec.r);
    trace.records.push_back(rec);
    if (i + 1 < n) {
      advance();
      advance();
    }
  }
  return trace;
}

double ham_level(const Oval& oval, Vec2 pt) { return ham_level_rel(oval, pt - oval.origin()); }

SectorialRates sectorial_rate(const Oval& oval, const CenterTrace& trace) {
  const auto& rec = trace.records;
  if (rec.size() < 2) throw Error(ErrorCode::TooShort, "sectorial rates need at least two records");
  SectorialRates out;
  for (std::size_t i = 0; i + 1 < rec.size(); ++i) {
    const double dbeta = std::abs(wrap_angle(rec[i + 1].beta - rec[i].beta));
    const double steps = static_cast<double>(rec[i + 1].step - rec[i].step);
    out.rate.push_back(0.5 * rec[i].big_r * rec[i + 1].big_r * dbeta / steps);
    out.reference.push_back(2.0 * std::pow(rec[i].r, 3) / width(oval, rec[i].alpha));
  }
  return out;
}

std::vector<Vec2> outer_area_orbit(const Oval& oval, Vec2 x0, std::size_t n) {
  std::vector<Vec2> pts{x0};
  Vec2 x = x0;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      x = outer_area_billiard_step(oval, outer_area_billiard_step(oval, x));
    } catch (const Error& e) {
      throw OrbitError(i, e);
    }
    pts.push_back(x);
  }
  return pts;
}

std::vector<double> kepler_rates(const Oval& oval, Vec2 x0, std::size_t n) {
  const Vec2 o = oval.origin();
  const auto pts = outer_area_orbit(oval, x0, n);
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec2 a = pts[i] - o, b = pts[i + 1] - o;
    out.push_back(0.5 * norm(a) * norm(b) * std::abs(wrap_angle(polar_angle(b) - polar_angle(a))));
  }
  return out;
}

double level_set_distance(const Oval& oval, const std::vector<Vec2>& pts, double level) {
  if (pts.empty()) throw Error(ErrorCode::EmptyInput, "no points to compare");
  auto radius = [&](double th) { return level / width(oval, th + 0.5 * kPi); };
  constexpr int kCurve = 4096;
  std::vector<Vec2> curve(kCurve);
  double mean_r = 0.0;
  for (int i = 0; i < kCurve; ++i) {
    const double th = kTwoPi * i / kCurve;
    curve[i] = radius(th) * direction(th);
    mean_r += radius(th) / kCurve;
  }
  double worst = 0.0;
  // Points to curve: the radial gap bounds the distance.
  for (const Vec2& p : pts) worst = std::max(worst, std::abs(norm(p) - radius(polar_angle(p))));
  for (const Vec2& c : curve) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& p : pts) best = std::min(best, distance(c, p));
    worst = std::max(worst, best);
  }
  return worst / mean_r;
}

double ellipse_center_locus(const Oval& table, const PeriodicOrbit& orbit) {
  double a = 0.0, b = 0.0;
  if (const auto* e = std::get_if<Ellipse>(&table.kind())) {
    a = e->a;
    b = e->b;
  } else if (const auto* c = std::get_if<Circle>(&table.kind())) {
    a = b = c->r;
  } else {
    throw Error(ErrorCode::InvalidArgument, "center locus needs an ellipse or circle table");
  }
  const double check = verify_periodic(table, orbit);
  if (!(check < 1e-7)) {
    throw Error(ErrorCode::NotPeriodic, fmt::format("orbit misses itself by {}", check));
  }
  const Vec2 o = table.origin();
  // Confocal parameter of the ellipse through the vertices, from the quadratic
  // X (b^2 + l) + Y (a^2 + l) = (a^2 + l)(b^2 + l); averaged over vertices.
  double lambda = 0.0;
  for (const Vec2& v : orbit.vertices) {
    const Vec2 d = v - o;
    const double X = d.x * d.x, Y = d.y * d.y;
    const double bq = a * a + b * b - X - Y;
    const double cq = a * a * b * b - X * b * b - Y * a * a;
    lambda += 0.5 * (-bq + std::sqrt(bq * bq - 4.0 * cq));
  }
  lambda /= static_cast<double>(orbit.vertices.size());
  const double A2 = a * a + lambda, B2 = b * b + lambda;
  // The polar dual of the outer ellipse with respect to the table has
  // semi-axes A^2/a and B^2/b.
  double worst = 0.0;
  for (const Vec2& v : orbit.vertices) {
    const Vec2 c = circle_center(table, v) - o;
    worst = std::max(worst, std::abs(c.x * c.x * a * a / (A2 * A2) + c.y * c.y * b * b / (B2 * B2) - 1.0));
  }
  return worst;
}

}  // namespace olb

#include "olb/degenerate.hpp"

#include <fmt/format.h>

#include <cmath>

#include "olb/error.hpp"
#include "olb/numerics.hpp"
#include "olb/olbmap.hpp"

namespace olb {

SegmentTable::SegmentTable(Vec2 a_, Vec2 b_) : a(a_), b(b_) {
  if (!(distance(a, b) > 0)) throw Error(ErrorCode::InvalidArgument, "segment endpoints coincide");
}

Vec2 segment_pivot(const SegmentTable& seg, Vec2 c) {
  // Orbits creep towards the line geometrically, so only exact collinearity
  // is rejected.
  if (cross(seg.b - seg.a, c - seg.a) == 0.0) {
    throw Error(ErrorCode::OnAxis, fmt::format("point ({}, {}) is on the segment's line", c.x, c.y));
  }
  return cross(seg.a - c, seg.b - c) > 0 ? seg.a : seg.b;
}

Vec2 segment_step(const SegmentTable& seg, Vec2 c) {
  const Vec2 e = segment_pivot(seg, c);
  const Vec2 o = e == seg.a ? seg.b : seg.a;
  const Vec2 u = (e - c) / distance(e, c);
  const double s_sum = seg.focal_sum(c);
  const Vec2 eo = e - o;
  // |D - E| + |D - O| = S with D = E + s u solved in closed form.
  const double s = (s_sum * s_sum - dot(eo, eo)) / (2.0 * (s_sum + dot(u, eo)));
  return e + s * u;
}

Ellipse confocal_ellipse(double t) {
  if (!(t > 0)) throw Error(ErrorCode::NonPositiveT, fmt::format("t = {} must be positive", t));
  return {std::cosh(t), std::sinh(t)};
}

double radial_deviation(double t) {
  const double sh = std::sinh(t);
  const double rc = 0.5 * std::exp(t);
  // sqrt(sinh^2 + cos^2) is monotone in cos^2, so the extremes sit at the axes.
  return std::max(std::abs(sh - rc), std::abs(std::sqrt(sh * sh + 1.0) - rc));
}

double hausdorff_to_circle(double t) {
  const Ellipse e = confocal_ellipse(t);
  const double rc = 0.5 * std::exp(t);
  constexpr int kSamples = 8192;
  auto ell = [&](double s) { return Vec2{e.a * std::cos(s), e.b * std::sin(s)}; };

  // Ellipse to circle: the distance is radial.
  auto from_ellipse = [&](double s) { return std::abs(norm(ell(s)) - rc); };
  // Circle to ellipse: minimise over the ellipse parameter near the same angle.
  auto to_ellipse = [&](double th) {
    const Vec2 q = rc * direction(th);
    // Foot of the perpendicular: (E(s) - q) . E'(s) = 0.
    auto foot = [&](double s) {
      const Vec2 d = ell(s) - q;
      const Vec2 t1{-e.a * std::sin(s), e.b * std::cos(s)};
      const Vec2 t2{-e.a * std::cos(s), -e.b * std::sin(s)};
      return num::Jet{dot(d, t1), dot(t1, t1) + dot(d, t2)};
    };
    num::RootOptions opts;
    opts.ftol = 1e-15 * e.a * e.a;
    return distance(q, ell(num::solve_bracketed(foot, th - 0.5, th + 0.5, opts).x));
  };

  double best = 0.0;
  for (const auto& f : {std::function<double(double)>(from_ellipse), std::function<double(double)>(to_ellipse)}) {
    int arg = 0;
    double top = -1.0;
    for (int i = 0; i < kSamples; ++i) {
      const double v = f(kTwoPi * i / kSamples);
      if (v > top) {
        top = v;
        arg = i;
      }
    }
    const double h = kTwoPi / kSamples;
    top = std::max(top, num::maximize(f, kTwoPi * arg / kSamples - h, kTwoPi * arg / kSamples + h).second);
    best = std::max(best, top);
  }
  return best;
}

Vec2 poncelet_step(double r, Vec2 p, Endpoint endpoint) {
  if (!(r > 1)) throw Error(ErrorCode::InvalidArgument, "Poncelet circle must enclose the endpoints");
  const Vec2 e{endpoint == Endpoint::Left ? -1.0 : 1.0, 0.0};
  const Vec2 d = e - p;
  const double s = -2.0 * dot(p, d) / dot(d, d);
  return p + s * d;
}

double poncelet_double_angle(double r, double theta) {
  const SegmentTable seg({-1.0, 0.0}, {1.0, 0.0});
  Vec2 p = r * direction(theta);
  double total = 0.0;
  Endpoint next = Endpoint::Left;
  for (int k = 0; k < 2; ++k) {
    if (k == 0) {
      // Points on the axis keep the alternation starting from the left end.
      if (std::abs(p.y) > 1e-12 * r) next = segment_pivot(seg, p).x < 0 ? Endpoint::Left : Endpoint::Right;
    } else {
      next = next == Endpoint::Left ? Endpoint::Right : Endpoint::Left;
    }
    const Vec2 q = poncelet_step(r, p, next);
    total += wrap_angle(polar_angle(q) - polar_angle(p));
    p = q;
  }
  // Each chord turns by about pi; wrapping drops the full turn.
  return wrap_angle(total);
}

namespace {

double foci_offset(const Oval& table) {
  if (const auto* e = std::get_if<Ellipse>(&table.kind())) {
    const double a = std::max(e->a, e->b), b = std::min(e->a, e->b);
    return std::sqrt(a * a - b * b);
  }
  if (std::holds_alternative<Circle>(table.kind())) return 0.0;
  throw Error(ErrorCode::InvalidArgument, "focal sums need an ellipse or circle table");
}

}  // namespace

double focal_sum(const Oval& table, Vec2 p) {
  const double c = foci_offset(table);
  Vec2 axis{1.0, 0.0};
  if (const auto* e = std::get_if<Ellipse>(&table.kind()); e && e->b > e->a) axis = {0.0, 1.0};
  const Vec2 o = table.origin();
  return distance(p, o + c * axis) + distance(p, o - c * axis);
}

double confocal_residual(const Oval& table, Vec2 p) {
  return std::abs(focal_sum(table, apply(table, p)) - focal_sum(table, p));
}

double measure_density(double a, double b, double lambda, Vec2 pt) {
  if (!(lambda > 0) || !(a > 0) || !(b > 0)) {
    throw Error(ErrorCode::InvalidArgument, "need a, b, lambda > 0");
  }
  const double A2 = a * a + lambda, B2 = b * b + lambda;
  const double on = pt.x * pt.x / A2 + pt.y * pt.y / B2 - 1.0;
  if (std::abs(on) > 1e-8) {
    throw Error(ErrorCode::OffCurve, fmt::format("point misses the outer ellipse by {}", on));
  }
  const double first = pt.x * pt.x / (A2 * A2) + pt.y * pt.y / (B2 * B2);
  const double second = pt.x * pt.x / (a * a) + pt.y * pt.y / (b * b) - 1.0;
  return 1.0 / std::sqrt(first * second);
}

double measure_density_t(MeasureKind kind, double a, double b, double lambda, double t) {
  const double c = std::cos(t), s = std::sin(t);
  switch (kind) {
    case MeasureKind::ArcLength: {
      const double A = std::sqrt(a * a + lambda), B = std::sqrt(b * b + lambda);
      const double ds = std::hypot(A * s, B * c);
      return ds * measure_density(a, b, lambda, {A * c, B * s});
    }
    case MeasureKind::CircleLimit:
      return 1.0 / std::sqrt(b * b * c * c + a * a * s * s);
    case MeasureKind::Segment:
      return 1.0 / (a * std::abs(s));
  }
  return 0.0;
}

double measure_length(MeasureKind kind, double a, double b, double lambda, double t0, double t1) {
  return num::integrate([&](double t) { return measure_density_t(kind, a, b, lambda, t); }, t0, t1, 1e-13);
}

}  // namespace olb

#include "olb/olbmap.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "olb/error.hpp"
#include "olb/numerics.hpp"

namespace olb {

namespace {

constexpr int kScanSamples = 256;
constexpr double kBranchTol = 1e-8;

// Shrinks `eps` until f(end - eps) is positive; returns end - eps.
double positive_inside(const std::function<double(double)>& f, double end, double eps, ErrorCode code,
                       const char* what) {
  while (f(end - eps) <= 0.0) {
    eps *= 0.5;
    if (eps < 1e-14) throw Error(code, what);
  }
  return end - eps;
}

}  // namespace

AuxCircle aux_circle(const Oval& oval, const TangentFan& fan) {
  // The circle is inscribed in the exterior angle at the apex and touches the
  // positive tangent line at x', so its radius is |Ax'| cot(phi/2).
  const double radius = fan.len_pos / std::tan(0.5 * fan.phi);
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::NoCircle, fmt::format("auxiliary radius {} is not a positive number", radius));
  }
  const Vec2 normal = direction(fan.pos.alpha);
  const Vec2 center = fan.pos.position + radius * normal;
  if (!(cross(fan.pos.position - fan.apex, center - fan.apex) < 0)) {
    throw Error(ErrorCode::NoCircle, "auxiliary circle is not on the right of the positive tangent ray");
  }
  const double to_neg_line = oval.support(fan.neg.alpha) - dot(center, direction(fan.neg.alpha));
  if (std::abs(to_neg_line - radius) > 1e-8 * std::max(1.0, radius)) {
    throw Error(ErrorCode::NoCircle, fmt::format("auxiliary circle misses the negative tangent by {}",
                                                 to_neg_line - radius));
  }
  return {center, radius, fan.pos};
}

AuxCircle aux_circle(const Oval& oval, Vec2 apex) { return aux_circle(oval, tangent_fan(oval, apex)); }

MapStep step(const Oval& oval, Vec2 apex) {
  MapStep out;
  out.apex = apex;
  out.fan = tangent_fan(oval, apex, std::max(1e-9, kNearBoundaryFraction * oval.diameter()));
  out.circle = aux_circle(oval, out.fan);

  const Vec2 xp = out.fan.pos.position;
  const double rho = out.circle.radius;
  const double lo = out.fan.pos.alpha;
  // Signed gap p(b) - c.n(b) - rho between the table's support line at b and
  // the circle's; zero at the two outer common tangents (the negative tangent
  // and the exit). With c = x' + rho n(lo) the O(rho) terms cancel
  // analytically, which matters because rho grows like r^2.
  auto h = [&](double b) {
    const double c = std::cos(0.5 * (b - lo));
    return oval.support(b) - dot(xp, direction(b)) - 2.0 * rho * c * c;
  };
  auto hjet = [&](double b) {
    const auto j = oval.jet(b);
    const double c = std::cos(0.5 * (b - lo));
    return num::Jet{j.p - dot(xp, direction(b)) - 2.0 * rho * c * c,
                    j.dp - dot(xp, tangent_dir(b)) + rho * std::sin(b - lo)};
  };

  const double end = out.fan.neg.alpha + kTwoPi;
  const double hi = positive_inside(h, end, 0.5 * (end - lo), ErrorCode::NoCircle,
                                    "no outer common tangent besides the negative tangent line");
  const auto brackets = num::scan_brackets(h, lo, hi, kScanSamples);
  if (brackets.size() != 1) {
    throw Error(ErrorCode::BranchAmbiguity,
                fmt::format("{} candidate exit tangents for apex ({}, {})", brackets.size(), apex.x, apex.y));
  }
  const double q = num::solve_bracketed(hjet, brackets.front().first, brackets.front().second).x;
  if (q - lo < kBranchTol || end - q < kBranchTol) {
    throw Error(ErrorCode::BranchAmbiguity, "exit tangent coincides with an apex tangent");
  }
  if (q - lo >= kPi) {
    throw Error(ErrorCode::BranchAmbiguity, "exit tangent does not meet the positive tangent ahead of x'");
  }
  out.exit = point_at(oval, q);
  out.image = support_intersection(oval, lo, q);
  if (!(dot(out.image - out.fan.pos.position, out.fan.pos.position - apex) > 0)) {
    throw Error(ErrorCode::BranchAmbiguity, "image is not beyond x' on the positive tangent ray");
  }
  return out;
}

double inscribed_radius_after(const Oval& oval, double alpha, double alpha_next) {
  const Vec2 a = support_intersection(oval, alpha, alpha_next);
  return distance(a, point_at(oval, alpha_next).position) * std::tan(0.5 * (alpha_next - alpha));
}

double inscribed_radius_before(const Oval& oval, double alpha, double alpha_next) {
  const Vec2 a = support_intersection(oval, alpha, alpha_next);
  return distance(a, point_at(oval, alpha).position) * std::tan(0.5 * (alpha_next - alpha));
}

GeneratingEval generating(const Oval& oval, double alpha, double alpha_next) {
  const double gap = alpha_next - alpha;
  if (!(gap > 0 && gap < kPi)) {
    throw Error(ErrorCode::ParallelTangents,
                fmt::format("tangent gap {} leaves (0, pi); no exterior apex", gap));
  }
  const CurvePoint x = point_at(oval, alpha);
  const CurvePoint xn = point_at(oval, alpha_next);
  GeneratingEval e;
  e.apex = support_intersection(oval, alpha, alpha_next);
  e.len_neg = distance(e.apex, x.position);
  e.len_pos = distance(e.apex, xn.position);
  e.value = e.len_neg + e.len_pos;
  // cot(phi/2) = tan(gap/2) since phi = pi - gap.
  const double t = std::tan(0.5 * gap);
  e.d1 = -x.curvature * e.len_neg * t - 1.0;
  e.d2 = xn.curvature * e.len_pos * t + 1.0;
  const double c = std::cos(0.5 * gap);
  e.d12 = -x.curvature * xn.curvature * e.value / (2.0 * c * c);
  return e;
}

double generating_relation_residual(const Oval& oval, double a0, double a1, double a2) {
  const double k = point_at(oval, a1).curvature;
  return k * (inscribed_radius_after(oval, a0, a1) - inscribed_radius_before(oval, a1, a2));
}

double step_variational(const Oval& oval, double alpha, double alpha_next) {
  const double gap = alpha_next - alpha;
  if (!(gap > 1e-9 && gap < kPi)) {
    throw Error(ErrorCode::NoRoot, fmt::format("tangent gap {} is degenerate", gap));
  }
  const double target = inscribed_radius_after(oval, alpha, alpha_next);
  const double b = alpha_next;
  auto f = [&](double c) {
    if (c <= b) return -target;
    return inscribed_radius_before(oval, b, c) - target;
  };
  const double hi = positive_inside(f, b + kPi, 0.5 * kPi, ErrorCode::NoRoot,
                                    "no admissible next tangency in the forward half-turn");
  const auto brackets = num::scan_brackets(f, b, hi, kScanSamples);
  if (brackets.size() != 1) {
    throw Error(ErrorCode::NoRoot, fmt::format("{} candidate roots for the next tangency", brackets.size()));
  }
  const double scale = std::max(1.0, target);
  num::RootOptions opts;
  opts.ftol = 1e-13 * scale;
  return num::solve_bracketed(std::function<double(double)>(f), brackets.front().first,
                              brackets.front().second, opts)
      .x;
}

double area_form_factor(const Oval& oval, Vec2 apex) {
  const TangentFan fan = tangent_fan(oval, apex);
  return (1.0 / std::tan(0.5 * fan.phi)) * (1.0 / fan.len_neg + 1.0 / fan.len_pos);
}

double form_invariance_residual(const Oval& oval, Vec2 apex, double h) {
  const Vec2 fx = (apply(oval, apex + Vec2{h, 0}) - apply(oval, apex - Vec2{h, 0})) / (2.0 * h);
  const Vec2 fy = (apply(oval, apex + Vec2{0, h}) - apply(oval, apex - Vec2{0, h})) / (2.0 * h);
  const double det = cross(fx, fy);
  const Vec2 image = apply(oval, apex);
  return std::abs(area_form_factor(oval, image) * det / area_form_factor(oval, apex) - 1.0);
}

double commute_gap(const Oval& first, const Oval& second, Vec2 apex) {
  return distance(apply(first, apply(second, apex)), apply(second, apply(first, apex)));
}

std::vector<Vec2> orbit(const Oval& oval, Vec2 start, std::size_t n, int stride) {
  if (stride != 1 && stride != 2) throw Error(ErrorCode::InvalidArgument, "stride must be 1 or 2");
  std::vector<Vec2> pts;
  pts.reserve(n + 1);
  pts.push_back(start);
  Vec2 cur = start;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      for (int s = 0; s < stride; ++s) cur = apply(oval, cur);
    } catch (const Error& e) {
      throw OrbitError(i, e);
    }
    pts.push_back(cur);
  }
  return pts;
}

}  // namespace olb

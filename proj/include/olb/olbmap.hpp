#pragma once

#include <cstddef>
#include <vector>

#include "olb/geometry.hpp"

namespace olb {

/// Circle tangent to the table at the positive tangency point and to the
/// negative tangent line, on the outer side of the positive tangent ray.
struct AuxCircle {
  Vec2 center;
  double radius = 0.0;
  CurvePoint tangency;
};

/// One application of the outer length billiard map.
struct MapStep {
  Vec2 apex;
  TangentFan fan;
  AuxCircle circle;
  CurvePoint exit;  // tangency of the second common tangent of circle and table
  Vec2 image;
};

/// Generating function H(x, x') = |xA| + |Ax'| and its derivatives with
/// respect to arc length.
struct GeneratingEval {
  double value = 0.0;
  double d1 = 0.0;   // dH/dx
  double d2 = 0.0;   // dH/dx'
  double d12 = 0.0;  // d2H/dx dx'
  double len_neg = 0.0;  // |Ax|
  double len_pos = 0.0;  // |Ax'|
  Vec2 apex;
};

/// Relative clearance below which apexes are rejected by step().
inline constexpr double kNearBoundaryFraction = 1e-6;

AuxCircle aux_circle(const Oval& oval, Vec2 apex);
AuxCircle aux_circle(const Oval& oval, const TangentFan& fan);

MapStep step(const Oval& oval, Vec2 apex);
inline Vec2 apply(const Oval& oval, Vec2 apex) { return step(oval, apex).image; }
inline Vec2 apply_twice(const Oval& oval, Vec2 apex) { return apply(oval, apply(oval, apex)); }

/// Next tangency angle from the critical-point condition of H(x,x') + H(x',x'').
double step_variational(const Oval& oval, double alpha, double alpha_next);

GeneratingEval generating(const Oval& oval, double alpha, double alpha_next);

/// Radius of the circle tangent to the support lines at `alpha` and
/// `alpha_next`, touching the latter at its tangency point:
/// |Ax'| tan((alpha_next - alpha)/2). Curvature-free form of dH/dx'.
double inscribed_radius_after(const Oval& oval, double alpha, double alpha_next);
/// Same for the circle touching the support line at `alpha` at its tangency
/// point: |Ax| tan((alpha_next - alpha)/2).
double inscribed_radius_before(const Oval& oval, double alpha, double alpha_next);

/// Residual of d2(x,x') + d1(x',x'') = 0 in arc-length units.
double generating_relation_residual(const Oval& oval, double a0, double a1, double a2);

/// Density factor C_A of the invariant area form relative to dx ^ dy.
double area_form_factor(const Oval& oval, Vec2 apex);

/// |C_F(A) det DF(A) / C_A - 1| with DF from central differences of step h.
double form_invariance_residual(const Oval& oval, Vec2 apex, double h);

double commute_gap(const Oval& first, const Oval& second, Vec2 apex);

/// Iterates of step (stride 1) or step twice (stride 2); n + 1 points
/// including the start. Failures raise OrbitError with the step index.
std::vector<Vec2> orbit(const Oval& oval, Vec2 start, std::size_t n, int stride = 1);

}  // namespace olb

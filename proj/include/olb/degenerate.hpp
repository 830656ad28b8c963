#pragma once

#include "olb/geometry.hpp"

namespace olb {

/// A segment as a degenerate table; its invariant curves are the ellipses
/// with foci at the endpoints.
struct SegmentTable {
  Vec2 a;
  Vec2 b;

  SegmentTable(Vec2 a_, Vec2 b_);
  double half_length() const { return 0.5 * distance(a, b); }
  double focal_sum(Vec2 c) const { return distance(c, a) + distance(c, b); }
};

/// The endpoint the chord from `c` passes through (the other endpoint lies to
/// its left, matching the positive tangent of an oval).
Vec2 segment_pivot(const SegmentTable& seg, Vec2 c);

/// One step of the segment map: the point on the ray from c through the
/// pivot endpoint with the same focal sum as c.
Vec2 segment_step(const SegmentTable& seg, Vec2 c);

/// Confocal ellipses with foci (+-1, 0): semi-axes (cosh t, sinh t).
Ellipse confocal_ellipse(double t);

/// Hausdorff distance between E_t and the circle of radius e^t / 2.
double hausdorff_to_circle(double t);
/// max over alpha of |sqrt(sinh^2 t + cos^2 alpha) - e^t/2|.
double radial_deviation(double t);

enum class Endpoint { Left, Right };

/// Second intersection of the circle |x| = r with the line through `p` and
/// the endpoint (-1, 0) or (1, 0).
Vec2 poncelet_step(double r, Vec2 p, Endpoint endpoint);
/// Two steps of the alternating map starting at angle theta, with the first
/// endpoint chosen as for the segment map. Returns the signed central angle.
double poncelet_double_angle(double r, double theta);

/// Focal sum for Ellipse/Circle tables about their centre.
double focal_sum(const Oval& ellipse_table, Vec2 p);
/// |focal sum(F(A)) - focal sum(A)| for an ellipse or circle table.
double confocal_residual(const Oval& ellipse_table, Vec2 p);

/// Invariant density 1/G(x,y) per unit arc length on the ellipse
/// x^2/(a^2+l) + y^2/(b^2+l) = 1 outside the table ellipse (a, b).
double measure_density(double a, double b, double lambda, Vec2 point);

/// The same measures written against the eccentric angle t of the outer
/// ellipse, (sqrt(a^2+l) cos t, sqrt(b^2+l) sin t).
enum class MeasureKind { ArcLength, CircleLimit, Segment };
double measure_density_t(MeasureKind kind, double a, double b, double lambda, double t);
/// Integral of the density over the eccentric-angle interval [t0, t1].
double measure_length(MeasureKind kind, double a, double b, double lambda, double t0, double t1);

}  // namespace olb

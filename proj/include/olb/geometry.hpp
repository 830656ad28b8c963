#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "olb/vec2.hpp"

namespace olb {

// Table shapes. Each is described in the plane's own frame; `Fourier` may be
// off-centre through its first harmonic.
struct Circle {
  double r = 1.0;
};
struct Ellipse {
  double a = 1.0;  // semi-axis along x
  double b = 1.0;  // semi-axis along y
};
/// Unit ball of the l^p norm scaled by `scale`; 1 < p <= 2 keeps the support
/// function twice differentiable.
struct LpBall {
  double p = 2.0;
  double scale = 1.0;
};
/// p(a) = c0 + sum_k (cos_terms[k] cos ka + sin_terms[k] sin ka), index 0 unused.
struct Fourier {
  double c0 = 1.0;
  std::vector<double> cos_terms;
  std::vector<double> sin_terms;
};

using OvalKind = std::variant<Circle, Ellipse, LpBall, Fourier>;

struct SupportJet {
  double p = 0.0;
  double dp = 0.0;
  double ddp = 0.0;
};

struct CurvePoint {
  double alpha = 0.0;  // outward normal angle
  Vec2 position;
  Vec2 tangent;      // counterclockwise unit tangent
  double curvature;  // 1 / (p + p''), +inf where the radius of curvature vanishes
};

/// The two tangents from an exterior apex. `pos` is the tangency point the
/// ray from the apex reaches travelling along the curve's orientation.
struct TangentFan {
  Vec2 apex;
  CurvePoint neg;
  CurvePoint pos;
  double phi = 0.0;  // angle at the apex between the tangent segments
  double len_neg = 0.0;
  double len_pos = 0.0;
  double clearance = 0.0;  // distance from the apex to the curve
};

/// A strictly convex closed curve given by its support function.
/// Immutable after construction.
class Oval {
 public:
  explicit Oval(OvalKind kind);
  Oval(OvalKind kind, Vec2 origin);

  const OvalKind& kind() const { return kind_; }
  /// Reference point for polar coordinates (defaults to the centroid).
  Vec2 origin() const { return origin_; }
  double diameter() const { return diameter_; }

  SupportJet jet(double alpha) const;
  double support(double alpha) const { return jet(alpha).p; }
  /// Support value measured from `from` instead of the frame origin.
  double support_from(double alpha, Vec2 from) const {
    return support(alpha) - dot(from, direction(alpha));
  }
  double radius_of_curvature(double alpha) const {
    const auto j = jet(alpha);
    return j.p + j.ddp;
  }

  bool is_lp() const { return std::holds_alternative<LpBall>(kind_); }

  /// Canonical table-spec string, e.g. "ellipse:a=2,b=1".
  std::string spec() const;

 private:
  OvalKind kind_;
  Vec2 origin_;
  double diameter_ = 0.0;

  void validate() const;
};

/// Parses a table spec such as "circle:r=1" or "fourier:c0=1,a2=0.05,b3=0.02".
Oval parse_table(std::string_view spec);

CurvePoint point_at(const Oval& oval, double alpha);

/// Distance between the two support lines parallel to direction `alpha`.
double width(const Oval& oval, double alpha);
double diameter(const Oval& oval);

/// Tangent fan from an exterior point. Throws PointInsideCurve when the point
/// is inside or within `min_clearance` of the curve.
TangentFan tangent_fan(const Oval& oval, Vec2 apex, double min_clearance = 1e-9);

/// Distance from an exterior point to the curve (<= 0 for interior points).
double clearance(const Oval& oval, Vec2 point);

Oval central_symmetrization(const Oval& oval);

enum class DualMode { Euclidean, Symplectic };

/// Curve given by its radial function about a centre.
struct RadialCurve {
  std::function<double(double)> radius;
  Vec2 center;

  Vec2 at(double alpha) const { return center + radius(alpha) * direction(alpha); }
};

/// Polar dual about the oval's origin: r(a) = 1 / p(a); symplectic mode turns
/// the result a quarter turn counterclockwise.
RadialCurve polar_dual(const Oval& oval, DualMode mode = DualMode::Euclidean);

/// Dual of the central symmetrization: r(a) = 1 / w(a).
RadialCurve dual_symmetrized(const Oval& oval);

/// Intersection of the support lines with normal angles a and b.
Vec2 support_intersection(const Oval& oval, double a, double b);

}  // namespace olb

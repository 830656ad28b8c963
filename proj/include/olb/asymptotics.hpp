#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "olb/geometry.hpp"

namespace olb {

/// Homogeneous degree-0 field -(s(alpha)/r) d/dalpha about `origin`; its
/// Cartesian magnitude is s(alpha).
struct RadialField {
  Vec2 origin;
  std::function<double(double)> angular_speed;

  Vec2 at(Vec2 x) const;
};

/// The field X with speed 2 w(alpha).
RadialField field_X(const Oval& oval, Vec2 origin);
inline RadialField field_X(const Oval& oval) { return field_X(oval, oval.origin()); }
/// The field Y with speed 4 |sin alpha| for the segment with endpoints (+-1, 0).
RadialField field_Y();

/// Time-one flow of X about the oval's origin. The radius is kept exactly.
Vec2 flow_time1(const Oval& oval, Vec2 x);

/// |F^2(x) - Phi(x)|.
double main1_residual(const Oval& oval, Vec2 x);

struct AsymptoticReport {
  std::vector<double> radii;
  std::vector<double> sup_residual;  // sup over directions of |F^2 - Phi|
  std::size_t directions = 0;
};

/// Residual grid over radii x equally spaced directions (parallel over cells).
AsymptoticReport main1_report(const Oval& oval, const std::vector<double>& radii, std::size_t directions);

struct DecayFit {
  double c_hat = 0.0;  // max r * residual
  double c_min = 0.0;  // min r * residual
  double slope = 0.0;  // of log residual against log r
};

DecayFit decay_fit(const AsymptoticReport& report);

struct StabilityScan {
  double r_min = 0.0;
  double r_max = 0.0;
  double max_jump = 0.0;  // largest |F^2(x) - x|
  std::size_t steps = 0;
};

StabilityScan stability_scan(const Oval& oval, Vec2 x0, std::size_t n);

/// Coefficients of the map in the chart (alpha, rho = 1/r):
/// alpha' = alpha + shift + f rho + ..., rho' = rho + g rho^2 + ...
/// where shift is pi for one step and 0 for two.
struct InfinityCoeffs {
  double f = 0.0;
  double g = 0.0;
};

inline constexpr double kChartRhos[3] = {1e-3, 5e-4, 2.5e-4};

InfinityCoeffs infinity_expansion(const Oval& oval, double alpha, int steps = 1);

struct InfinityChart {
  std::vector<double> alphas;
  std::vector<double> f;
  std::vector<double> g;
  int steps = 1;
};

InfinityChart infinity_chart(const Oval& oval, std::size_t n, int steps = 1);

struct LazutkinTables {
  std::vector<double> u;
  std::vector<double> a;
  std::vector<double> b;
};

/// b = exp(int -g/f), a = int b/f by cumulative trapezoid sums from u[0].
LazutkinTables lazutkin_change(const std::vector<double>& u, const std::vector<double>& f,
                               const std::vector<double>& g);

struct NormalFormSample {
  double rho = 0.0;
  double y = 0.0;
  double x_defect = 0.0;  // |x' - x - y| / y^2
  double y_defect = 0.0;  // |y' - y| / y^3
};

/// Double step in Lazutkin coordinates starting at (u, rho); `b_u` is b(u).
NormalFormSample normal_form_sample(const Oval& oval, double u, double b_u, double rho);

/// z = 2y - x with y the positive tangency point.
Vec2 outer_area_billiard_step(const Oval& oval, Vec2 x);

}  // namespace olb

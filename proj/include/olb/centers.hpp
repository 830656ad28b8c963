#pragma once

#include <cstddef>
#include <vector>

#include "olb/geometry.hpp"
#include "olb/periodic.hpp"

namespace olb {

Vec2 circle_center(const Oval& oval, Vec2 x);

struct CenterRecord {
  std::size_t step = 0;  // index in the stride-1 orbit
  Vec2 center;
  double beta = 0.0;  // polar angle of the centre about the origin
  double big_r = 0.0;  // distance of the centre from the origin
  double r = 0.0;      // distance of the orbit point from the origin
  double alpha = 0.0;  // polar angle of the orbit point
  Vec2 rescaled;       // (centre - origin) / r^2
};

struct CenterTrace {
  std::vector<CenterRecord> records;
};

/// Centres of every other auxiliary circle along the orbit of x0: steps
/// 0, 2, 4, ... (or 1, 3, 5, ... with `odd`). n records.
CenterTrace rescaled_center_orbit(const Oval& oval, Vec2 x0, std::size_t n, bool odd = false);

/// r w(alpha + pi/2) in polar coordinates about the origin.
double ham_level(const Oval& oval, Vec2 pt);

struct SectorialRates {
  std::vector<double> rate;       // 1/2 R_i R_{i+1} |d beta| per map step
  std::vector<double> reference;  // 2 r^3 / w(alpha)
};

/// Rates between consecutive records; each record gap spans two map steps.
SectorialRates sectorial_rate(const Oval& oval, const CenterTrace& trace);

/// 1/2 rho_i rho_{i+1} |d theta| per double step of the outer area billiard.
std::vector<double> kepler_rates(const Oval& oval, Vec2 x0, std::size_t n);
/// Stride-2 orbit of the outer area billiard.
std::vector<Vec2> outer_area_orbit(const Oval& oval, Vec2 x0, std::size_t n);

/// Hausdorff distance between a point set and the level curve
/// {ham_level = level}, relative to the curve's mean radius.
double level_set_distance(const Oval& oval, const std::vector<Vec2>& pts, double level);

/// Max over the orbit's vertices of the implicit-equation residual of the
/// auxiliary-circle centres on the ellipse dual to the orbit's confocal
/// ellipse. Throws NotPeriodic if the orbit fails verify_periodic.
double ellipse_center_locus(const Oval& ellipse_table, const PeriodicOrbit& orbit);

}  // namespace olb

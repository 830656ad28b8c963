#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "olb/centers.hpp"
#include "olb/geometry.hpp"
#include "olb/periodic.hpp"

namespace olb {

using Json = nlohmann::ordered_json;

/// Fixed 17 significant digits, so reruns are byte-identical.
std::string fmt17(double v);

struct OrbitRow {
  std::size_t step = 0;
  Vec2 point;
  double r = 0.0;
  double alpha = 0.0;
  double focal_or_level = 0.0;
  double residual = 0.0;
};

/// Iterates the map and fills rows. For ellipse and circle tables the level
/// column is the focal sum, otherwise 2r (the Hamiltonian of X). The residual
/// column is the generating-relation residual of the step(s) producing the row.
std::vector<OrbitRow> orbit_rows(const Oval& oval, Vec2 start, std::size_t steps, int stride);

void write_orbit_csv(std::ostream& out, const std::vector<OrbitRow>& rows);
void write_centers_csv(std::ostream& out, const Oval& oval, const CenterTrace& trace);

Json periodic_json(const PeriodicOrbit& orbit, double residual);

struct SvgStyle {
  std::string stroke = "#1f4e9c";
  double stroke_width = 1.0;  // in pixels, independent of the data scale
  bool connect = true;        // polyline rather than dots
  int size = 800;
};

/// Standalone SVG of a point sequence with an optional closed outline; the
/// viewBox is the data extent plus a 5% margin. Throws EmptyInput.
std::string render_svg(const std::vector<Vec2>& points, const std::vector<Vec2>& outline = {},
                       const SvgStyle& style = {});

/// 512 boundary points of the table.
std::vector<Vec2> table_outline(const Oval& oval, int samples = 512);

}  // namespace olb

#include "olb/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

#include "olb/degenerate.hpp"
#include "olb/error.hpp"
#include "olb/olbmap.hpp"

namespace olb {

std::string fmt17(double v) { return fmt::format("{:.17g}", v); }

std::vector<OrbitRow> orbit_rows(const Oval& oval, Vec2 start, std::size_t steps, int stride) {
  if (stride != 1 && stride != 2) throw Error(ErrorCode::InvalidArgument, "stride must be 1 or 2");
  const bool focal = std::holds_alternative<Ellipse>(oval.kind()) || std::holds_alternative<Circle>(oval.kind());
  const Vec2 o = oval.origin();
  auto row = [&](std::size_t i, Vec2 p, double residual) {
    const Vec2 d = p - o;
    OrbitRow r{i, p, norm(d), polar_angle(d), 0.0, residual};
    r.focal_or_level = focal ? focal_sum(oval, p) : 2.0 * r.r;
    return r;
  };
  std::vector<OrbitRow> rows;
  rows.reserve(steps + 1);
  rows.push_back(row(0, start, 0.0));
  Vec2 cur = start;
  for (std::size_t i = 1; i <= steps; ++i) {
    double residual = 0.0;
    try {
      for (int s = 0; s < stride; ++s) {
        const MapStep st = step(oval, cur);
        residual = std::max(residual, std::abs(generating_relation_residual(
                                          oval, st.fan.neg.alpha, st.fan.pos.alpha, st.exit.alpha)));
        cur = st.image;
      }
    } catch (const Error& e) {
      throw OrbitError(i - 1, e);
    }
    rows.push_back(row(i, cur, residual));
  }
  return rows;
}

void write_orbit_csv(std::ostream& out, const std::vector<OrbitRow>& rows) {
  out << "step,x,y,r,alpha,focal_or_level,residual\n";
  for (const auto& r : rows) {
    out << r.step << ',' << fmt17(r.point.x) << ',' << fmt17(r.point.y) << ',' << fmt17(r.r) << ','
        << fmt17(r.alpha) << ',' << fmt17(r.focal_or_level) << ',' << fmt17(r.residual) << '\n';
  }
}

void write_centers_csv(std::ostream& out, const Oval& oval, const CenterTrace& trace) {
  out << "step,cx,cy,beta,R,r,ham_level,rescaled_x,rescaled_y\n";
  for (const auto& c : trace.records) {
    out << c.step << ',' << fmt17(c.center.x) << ',' << fmt17(c.center.y) << ',' << fmt17(c.beta) << ','
        << fmt17(c.big_r) << ',' << fmt17(c.r) << ',' << fmt17(ham_level(oval, oval.origin() + c.rescaled))
        << ',' << fmt17(c.rescaled.x) << ',' << fmt17(c.rescaled.y) << '\n';
  }
}

Json periodic_json(const PeriodicOrbit& orbit, double residual) {
  Json j;
  j["k"] = orbit.k;
  j["m"] = orbit.m;
  j["alphas"] = orbit.alphas;
  Json verts = Json::array();
  for (const Vec2& v : orbit.vertices) verts.push_back({v.x, v.y});
  j["vertices"] = verts;
  j["perimeter"] = orbit.perimeter;
  j["residual"] = residual;
  return j;
}

std::vector<Vec2> table_outline(const Oval& oval, int samples) {
  std::vector<Vec2> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) pts.push_back(point_at(oval, kTwoPi * i / samples).position);
  return pts;
}

std::string render_svg(const std::vector<Vec2>& points, const std::vector<Vec2>& outline, const SvgStyle& style) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "nothing to draw");
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const auto* set : {&points, &outline}) {
    for (const Vec2& p : *set) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  double w = x1 - x0, h = y1 - y0;
  const double span = std::max({w, h, 1e-12});
  if (w <= 0) w = span;
  if (h <= 0) h = span;
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vx = x0 - mx, vw = w + 2 * mx, vh = h + 2 * my;
  // SVG y grows downwards; flip so the plot reads in the usual orientation.
  const double vy = -(y1 + my);
  auto coords = [](const std::vector<Vec2>& pts) {
    std::string s;
    for (const Vec2& p : pts) s += fmt::format("{},{} ", fmt17(p.x), fmt17(-p.y));
    if (!s.empty()) s.pop_back();
    return s;
  };

  std::string doc = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      style.size, static_cast<int>(std::lround(style.size * vh / vw)), fmt17(vx), fmt17(vy), fmt17(vw), fmt17(vh));
  if (!outline.empty()) {
    doc += fmt::format(
        "  <polygon points=\"{}\" fill=\"#dddddd\" stroke=\"#444444\" vector-effect=\"non-scaling-stroke\"/>\n",
        coords(outline));
  }
  if (style.connect) {
    doc += fmt::format(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" "
        "vector-effect=\"non-scaling-stroke\"/>\n",
        coords(points), style.stroke, style.stroke_width);
  } else {
    const double rad = 0.002 * std::max(vw, vh);
    for (const Vec2& p : points) {
      doc += fmt::format("  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", fmt17(p.x), fmt17(-p.y), fmt17(rad),
                         style.stroke);
    }
  }
  doc += "</svg>\n";
  return doc;
}

}  // namespace olb

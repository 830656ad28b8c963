#include "olb/checks.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "olb/asymptotics.hpp"
#include "olb/centers.hpp"
#include "olb/degenerate.hpp"
#include "olb/error.hpp"
#include "olb/numerics.hpp"
#include "olb/olbmap.hpp"
#include "olb/periodic.hpp"

namespace olb {

namespace {

// Relative spread of a positive sequence: (max - min) / max.
double variation(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / *hi;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

template <typename T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? std::move(fallback) : given;
}

Vec2 random_exterior(std::mt19937_64& rng, Vec2 origin, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> ur(r_lo, r_hi), ua(0.0, kTwoPi);
  const double r = ur(rng);
  return origin + r * direction(ua(rng));
}

CheckResult finish(CheckResult res, bool pass, double value, double bound, std::string summary) {
  res.pass = pass;
  res.value = value;
  res.bound = bound;
  res.summary = std::move(summary);
  res.report["value"] = value;
  res.report["bound"] = bound;
  res.report["pass"] = pass;
  return res;
}

// 1. Circle closed form.
CheckResult check_circle(const CheckConfig& cfg, CheckResult res) {
  const auto radii = or_default(cfg.radii, {1.5, 2.0, 5.0, 10.0, 100.0});
  const Oval table(Circle{1.0});
  constexpr int kAngles = 8;
  double worst = 0.0;
  for (double R : radii) {
    const double turn = 2.0 * std::acos(1.0 / R);
    for (int i = 0; i < kAngles; ++i) {
      const double th = kTwoPi * i / kAngles + 0.1;
      worst = std::max(worst, distance(apply(table, R * direction(th)), R * direction(th + turn)));
    }
  }
  res.report["radii"] = radii;
  res.report["angles"] = kAngles;
  res.report["max_vertex_error"] = worst;
  return finish(std::move(res), worst < 1e-9, worst, 1e-9, fmt::format("max vertex error {:.3g}", worst));
}

// 2. Confocal invariance on ellipse(2,1).
CheckResult check_confocal(const CheckConfig& cfg, CheckResult res) {
  const Oval table = parse_table(or_default(cfg.tables, {"ellipse:a=2,b=1"}).front());
  constexpr std::size_t kStarts = 20, kIterates = 1000;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Vec2> starts;
  for (std::size_t i = 0; i < kStarts; ++i) starts.push_back(random_exterior(rng, table.origin(), 2.5, 30.0));
  const auto drift = num::parallel_map<double>(kStarts, [&](std::size_t i) {
    Vec2 x = starts[i];
    const double s0 = focal_sum(table, x);
    double d = 0.0;
    for (std::size_t n = 0; n < kIterates; ++n) {
      x = apply(table, x);
      d = std::max(d, std::abs(focal_sum(table, x) - s0));
    }
    return d;
  });
  const double worst = max_of(drift);
  res.report["table"] = table.spec();
  res.report["starts"] = kStarts;
  res.report["iterates"] = kIterates;
  res.report["seed"] = cfg.seed;
  res.report["drift"] = drift;
  return finish(std::move(res), worst < 1e-6, worst, 1e-6, fmt::format("max focal-sum drift {:.3g}", worst));
}

Json main1_json(const Oval& table, const std::vector<double>& radii, std::size_t directions, bool& pass) {
  const AsymptoticReport rep = main1_report(table, radii, directions);
  const DecayFit fit = decay_fit(rep);
  std::vector<double> scaled;
  for (std::size_t i = 0; i < radii.size(); ++i) scaled.push_back(rep.sup_residual[i] * radii[i]);
  const double var = variation(scaled);
  pass = var < 0.25 && fit.slope >= -1.3 && fit.slope <= -0.8;
  Json j;
  j["table"] = table.spec();
  j["radii"] = radii;
  j["sup_residual"] = rep.sup_residual;
  j["C_hat"] = fit.c_hat;
  j["slope"] = fit.slope;
  j["scaled_variation"] = var;
  j["directions"] = directions;
  j["pass"] = pass;
  return j;
}

// 3. Decay of |F^2 - Phi|.
CheckResult check_main1(const CheckConfig& cfg, CheckResult res) {
  const auto specs = or_default(cfg.tables, {"ellipse:a=2,b=1", "lp:p=1.5"});
  const auto radii = or_default(cfg.radii, {50.0, 100.0, 200.0, 400.0, 800.0});
  constexpr std::size_t kDirections = 64;
  bool all = true;
  double worst_slope = -1.0;
  std::string summary;
  Json tables = Json::array();
  for (const auto& spec : specs) {
    bool pass = false;
    Json j = main1_json(parse_table(spec), radii, kDirections, pass);
    all = all && pass;
    const double slope = j["slope"].get<double>();
    if (std::abs(slope + 1.05) > std::abs(worst_slope + 1.05)) worst_slope = slope;
    summary += fmt::format("{}{} slope {:.3f} var {:.3f}", summary.empty() ? "" : "; ", spec, slope,
                           j["scaled_variation"].get<double>());
    tables.push_back(std::move(j));
  }
  if (specs.size() == 1) {
    res.report = tables.front();
  } else {
    res.report["tables"] = tables;
  }
  if (cfg.tables.empty()) {
    // Both default tables are centrally symmetric, which makes the residual
    // O(1/r^2); a table without that symmetry shows the generic 1/r rate.
    // Reported alongside, not part of the verdict.
    bool ignored = false;
    res.report["supplementary"] =
        main1_json(parse_table("fourier:c0=1,a2=0.05,b3=0.02"), radii, kDirections, ignored);
  }
  return finish(std::move(res), all, worst_slope, -0.8, summary);
}

// Normal angle reached from `alpha` after arc length h along the curve.
double shift_by_arclength(const Oval& oval, double alpha, double h) {
  double a = alpha + h / oval.radius_of_curvature(alpha);
  for (int i = 0; i < 4; ++i) {
    const double s = num::integrate([&](double t) { return oval.radius_of_curvature(t); }, alpha, a);
    a -= (s - h) / oval.radius_of_curvature(a);
  }
  return a;
}

// 4. Derivatives of the generating function.
CheckResult check_derivatives(const CheckConfig& cfg, CheckResult res) {
  const auto specs = or_default(cfg.tables, {"circle:r=1", "ellipse:a=2,b=1", "fourier:c0=1,a2=0.05,b3=0.02"});
  constexpr std::size_t kPairs = 1000;
  constexpr double h1 = 1e-6, h2 = 1e-4;
  double worst = 0.0, max_d12 = -std::numeric_limits<double>::infinity();
  Json per = Json::array();
  for (const auto& spec : specs) {
    const Oval table = parse_table(spec);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> ua(0.0, kTwoPi), ug(0.1, kPi - 0.1);
    double t_worst = 0.0, t_d12 = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kPairs; ++i) {
      const double a = ua(rng), b = a + ug(rng);
      auto H = [&](double x, double y) { return generating(table, x, y).value; };
      const GeneratingEval e = generating(table, a, b);
      const double ap = shift_by_arclength(table, a, h1), am = shift_by_arclength(table, a, -h1);
      const double bp = shift_by_arclength(table, b, h1), bm = shift_by_arclength(table, b, -h1);
      const double d1 = (H(ap, b) - H(am, b)) / (2 * h1);
      const double d2 = (H(a, bp) - H(a, bm)) / (2 * h1);
      auto mixed = [&](double h) {
        const double Ap = shift_by_arclength(table, a, h), Am = shift_by_arclength(table, a, -h);
        const double Bp = shift_by_arclength(table, b, h), Bm = shift_by_arclength(table, b, -h);
        return (H(Ap, Bp) - H(Ap, Bm) - H(Am, Bp) + H(Am, Bm)) / (4 * h * h);
      };
      // Near-opposite tangents make the O(h^2) term of the mixed difference
      // visible at 1e-5; one Richardson step removes it.
      const double d12 = (4.0 * mixed(0.5 * h2) - mixed(h2)) / 3.0;
      t_worst = std::max({t_worst, std::abs(d1 - e.d1) / std::abs(e.d1), std::abs(d2 - e.d2) / std::abs(e.d2),
                          std::abs(d12 - e.d12) / std::abs(e.d12)});
      t_d12 = std::max(t_d12, e.d12);
    }
    per.push_back({{"table", spec}, {"max_relative_error", t_worst}, {"max_d12", t_d12}});
    worst = std::max(worst, t_worst);
    max_d12 = std::max(max_d12, t_d12);
  }
  res.report["pairs_per_table"] = kPairs;
  res.report["seed"] = cfg.seed;
  res.report["steps"] = {{"first", h1}, {"mixed", h2}};
  res.report["tables"] = per;
  return finish(std::move(res), worst < 1e-5 && max_d12 < 0, worst, 1e-5,
                fmt::format("max relative error {:.3g}, max d12 {:.3g}", worst, max_d12));
}

// 5. Invariance of the area form.
CheckResult check_area_form(const CheckConfig& cfg, CheckResult res) {
  const Oval table = parse_table(or_default(cfg.tables, {"ellipse:a=2,b=1"}).front());
  constexpr std::size_t kPoints = 100;
  constexpr double h = 1e-5;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < kPoints; ++i) pts.push_back(random_exterior(rng, table.origin(), 2.5, 20.0));
  const auto r = num::parallel_map<double>(kPoints, [&](std::size_t i) { return form_invariance_residual(table, pts[i], h); });
  const double worst = max_of(r);
  res.report["table"] = table.spec();
  res.report["points"] = kPoints;
  res.report["step"] = h;
  res.report["seed"] = cfg.seed;
  return finish(std::move(res), worst < 1e-4, worst, 1e-4, fmt::format("max residual {:.3g}", worst));
}

// 6. Limit of the form factor at infinity.
CheckResult check_form_limit(const CheckConfig& cfg, CheckResult res) {
  const Oval table = parse_table(or_default(cfg.tables, {"fourier:c0=1,a2=0.05,b3=0.02"}).front());
  const auto radii = or_default(cfg.radii, {1e2, 1e3, 1e4});
  constexpr int kDirections = 16;
  std::vector<double> sup;
  for (double r : radii) {
    double s = 0.0;
    for (int k = 0; k < kDirections; ++k) {
      const double psi = kTwoPi * k / kDirections;
      s = std::max(s, std::abs(area_form_factor(table, table.origin() + r * direction(psi)) - 4.0 / width(table, psi)) * r);
    }
    sup.push_back(s);
  }
  const double var = variation(sup);
  res.report["table"] = table.spec();
  res.report["radii"] = radii;
  res.report["directions"] = kDirections;
  res.report["sup_scaled_gap"] = sup;
  return finish(std::move(res), var < 0.3, var, 0.3, fmt::format("r*|C - 4/w| variation {:.3g}", var));
}

// 7. Hausdorff distance of E_t to C_t.
CheckResult check_hausdorff(const CheckConfig& cfg, CheckResult res) {
  const auto ts = or_default(cfg.t_values, {2.0, 3.0, 4.0, 5.0});
  // The bound is attained exactly at the axes; allow for rounding only.
  constexpr double kRounding = 1e-9;
  bool pass = true;
  double worst = 0.0;
  Json rows = Json::array();
  for (double t : ts) {
    const double d = hausdorff_to_circle(t), bound = 0.5 * std::exp(-t), dev = radial_deviation(t);
    const bool ok = d <= bound * (1 + kRounding) && d >= 0.9 * dev;
    pass = pass && ok;
    worst = std::max(worst, d / bound);
    rows.push_back({{"t", t}, {"distance", d}, {"bound", bound}, {"radial_deviation", dev}, {"pass", ok}});
  }
  res.report["rows"] = rows;
  res.report["rounding_allowance"] = kRounding;
  return finish(std::move(res), pass, worst, 1.0 + kRounding,
                fmt::format("max distance/bound {:.12g}", worst));
}

// 8. Angle of the Poncelet double step.
CheckResult check_poncelet(const CheckConfig& cfg, CheckResult res) {
  const auto radii = or_default(cfg.radii, {100.0, 200.0, 400.0});
  constexpr int kAngles = 32;
  std::vector<double> sup;
  for (double r : radii) {
    double s = 0.0;
    for (int i = 0; i < kAngles; ++i) {
      const double th = kTwoPi * (i + 0.5) / kAngles;
      const double d = poncelet_double_angle(r, th);
      s = std::max(s, std::abs(std::abs(d) - 4.0 * std::abs(std::sin(th)) / r) * r * r);
    }
    sup.push_back(s);
  }
  const double var = variation(sup);
  res.report["radii"] = radii;
  res.report["angles"] = kAngles;
  res.report["sup_scaled_error"] = sup;
  return finish(std::move(res), var < 0.3, var, 0.3, fmt::format("r^2 error variation {:.3g}", var));
}

// 9. Segment map and the thin-ellipse limit.
CheckResult check_segment(const CheckConfig& cfg, CheckResult res) {
  const SegmentTable seg({-1, 0}, {1, 0});
  constexpr std::size_t kSteps = 10000;
  Vec2 c{3, 100};
  const double s0 = seg.focal_sum(c);
  double drift = 0.0;
  for (std::size_t i = 0; i < kSteps; ++i) {
    c = segment_step(seg, c);
    drift = std::max(drift, std::abs(seg.focal_sum(c) - s0));
  }
  const Oval thin(Ellipse{1.0, 1e-3});
  std::mt19937_64 rng(cfg.seed);
  double gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec2 p = random_exterior(rng, {0, 0}, 1.5, 10.0);
    gap = std::max(gap, distance(apply(thin, p), segment_step(seg, p)));
  }
  res.report["steps"] = kSteps;
  res.report["start"] = {3.0, 100.0};
  res.report["focal_drift"] = drift;
  res.report["thin_ellipse"] = {{"b", 1e-3}, {"points", 50}, {"max_gap", gap}, {"bound", 1e-3}};
  res.report["seed"] = cfg.seed;
  return finish(std::move(res), drift <= 1e-10 && gap <= 1e-3, drift, 1e-10,
                fmt::format("focal drift {:.3g}, thin-ellipse gap {:.3g}", drift, gap));
}

// 10. Preservation of interval measures.
CheckResult check_measure(const CheckConfig& cfg, CheckResult res) {
  constexpr double a = 2.0, b = 1.0, lambda = 3.0;
  constexpr int kIntervals = 20;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> ut(0.0, kTwoPi), ul(0.05, 0.5);
  const Oval table(Ellipse{a, b});
  const SegmentTable seg({-1, 0}, {1, 0});
  struct Case {
    MeasureKind kind;
    const char* name;
    double a, b;
  };
  const Case cases[] = {{MeasureKind::ArcLength, "arc_length", a, b},
                        {MeasureKind::CircleLimit, "circle_limit", a, b},
                        {MeasureKind::Segment, "segment", 1.0, 0.0}};
  double worst = 0.0;
  Json per;
  for (const Case& k : cases) {
    const double A = std::sqrt(k.a * k.a + lambda), B = std::sqrt(k.b * k.b + lambda);
    auto map = [&](Vec2 p) { return k.kind == MeasureKind::Segment ? segment_step(seg, p) : apply(table, p); };
    auto ecc = [&](Vec2 p) { return std::atan2(p.y / B, p.x / A); };
    double w = 0.0;
    for (int i = 0; i < kIntervals; ++i) {
      double t0 = ut(rng), len = ul(rng);
      // The segment density is singular on the axis; keep intervals off it.
      if (k.kind == MeasureKind::Segment) {
        t0 = std::fmod(t0, kPi);
        t0 = 0.1 + t0 * (kPi - 0.2 - len) / kPi;
      }
      const double t1 = t0 + len;
      const double s0 = ecc(map({A * std::cos(t0), B * std::sin(t0)}));
      const double s1 = s0 + wrap_angle(ecc(map({A * std::cos(t1), B * std::sin(t1)})) - s0);
      const double m0 = measure_length(k.kind, k.a, k.b, lambda, t0, t1);
      const double m1 = measure_length(k.kind, k.a, k.b, lambda, s0, s1);
      w = std::max(w, std::abs(std::abs(m1) - m0));
    }
    per[k.name] = w;
    worst = std::max(worst, w);
  }
  res.report["table"] = table.spec();
  res.report["lambda"] = lambda;
  res.report["intervals"] = kIntervals;
  res.report["seed"] = cfg.seed;
  res.report["max_error"] = per;
  return finish(std::move(res), worst < 1e-6, worst, 1e-6, fmt::format("max measure change {:.3g}", worst));
}

// 11. Periodic orbits.
CheckResult check_periodic(const CheckConfig&, CheckResult res) {
  const Oval circle(Circle{1.0});
  double circle_err = 0.0;
  for (int k = 3; k <= 7; ++k) {
    for (int m = 1; 2 * m < k; ++m) {
      const PeriodicOrbit orb = find_periodic(circle, k, m);
      for (const Vec2& v : orb.vertices) circle_err = std::max(circle_err, std::abs(norm(v) - 1.0 / std::cos(m * kPi / k)));
    }
  }
  const Oval ellipse(Ellipse{2.0, 1.0});
  double spread = 0.0, locus = 0.0;
  Json orbits = Json::array();
  for (int m = 1; m <= 2; ++m) {
    const PeriodicOrbit orb = find_periodic(ellipse, 5, m);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Vec2& v : orb.vertices) {
      lo = std::min(lo, focal_sum(ellipse, v));
      hi = std::max(hi, focal_sum(ellipse, v));
    }
    spread = std::max(spread, hi - lo);
    locus = std::max(locus, ellipse_center_locus(ellipse, orb));
    orbits.push_back(periodic_json(orb, verify_periodic(ellipse, orb)));
  }
  res.report["circle_radius_error"] = circle_err;
  res.report["ellipse_focal_spread"] = spread;
  res.report["ellipse_center_locus"] = locus;
  res.report["ellipse_orbits"] = orbits;
  const bool pass = circle_err < 1e-8 && spread < 1e-8 && locus < 1e-6;
  return finish(std::move(res), pass, std::max({circle_err / 1e-8, spread / 1e-8, locus / 1e-6}), 1.0,
                fmt::format("circle radius error {:.3g}, focal spread {:.3g}, locus residual {:.3g}", circle_err,
                            spread, locus));
}

// 12. Centres at infinity.
CheckResult check_centers(const CheckConfig&, CheckResult res) {
  constexpr double r0 = 1e3;
  constexpr std::size_t kRecords = 4000;
  const Oval ellipse(Ellipse{2.0, 1.0});
  const CenterTrace tr = rescaled_center_orbit(ellipse, ellipse.origin() + Vec2{r0, 0}, kRecords);
  std::vector<double> levels;
  for (const auto& rec : tr.records) levels.push_back(ham_level(ellipse, ellipse.origin() + rec.rescaled));
  const double ham_var = variation(levels);
  const SectorialRates sr = sectorial_rate(ellipse, tr);
  double sect = 0.0;
  for (std::size_t i = 0; i < sr.rate.size(); ++i) sect = std::max(sect, std::abs(sr.rate[i] / sr.reference[i] - 1.0));

  const Oval lp = parse_table("lp:p=1.5");
  const CenterTrace lt = rescaled_center_orbit(lp, lp.origin() + Vec2{r0, 0}, kRecords);
  std::vector<Vec2> pts;
  for (const auto& rec : lt.records) pts.push_back(rec.rescaled);
  const double lvl = level_set_distance(lp, pts, 2.0);

  res.report["r0"] = r0;
  res.report["records"] = kRecords;
  res.report["ellipse_ham_variation"] = ham_var;
  res.report["ellipse_sectorial_error"] = sect;
  res.report["lp_level_set_distance"] = lvl;
  const bool pass = ham_var < 0.02 && sect < 0.02 && lvl < 0.01;
  return finish(std::move(res), pass, std::max({ham_var / 0.02, sect / 0.02, lvl / 0.01}), 1.0,
                fmt::format("ham variation {:.3g}, sectorial error {:.3g}, lp level-set distance {:.3g}", ham_var,
                            sect, lvl));
}

// 13. Stability far out.
CheckResult check_stability(const CheckConfig& cfg, CheckResult res) {
  const Oval table = parse_table(or_default(cfg.tables, {"ellipse:a=2,b=1"}).front());
  constexpr double r0 = 50.0;
  constexpr std::size_t kSteps = 100000;
  const StabilityScan s = stability_scan(table, table.origin() + Vec2{r0, 0}, kSteps);
  const double excursion = std::max(r0 - s.r_min, s.r_max - r0) / r0;
  const double jump = s.max_jump / table.diameter();
  res.report["table"] = table.spec();
  res.report["r0"] = r0;
  res.report["steps"] = kSteps;
  res.report["r_min"] = s.r_min;
  res.report["r_max"] = s.r_max;
  res.report["max_jump_over_diameter"] = jump;
  return finish(std::move(res), excursion < 0.1 && jump <= 5.0, excursion, 0.1,
                fmt::format("relative excursion {:.3g}, max jump {:.3g} diameters", excursion, jump));
}

// 14. Non-commutativity.
CheckResult check_commute(const CheckConfig& cfg, CheckResult res) {
  const Oval e1(Ellipse{2.0, 1.0}), e2(Ellipse{std::sqrt(5.0), std::sqrt(2.0)});
  const Oval c1(Circle{1.0}), c2(Circle{2.0});
  std::mt19937_64 rng(cfg.seed);
  double confocal = 0.0, concentric = 0.0;
  for (int i = 0; i < 32; ++i) {
    const Vec2 p = random_exterior(rng, {0, 0}, 4.0, 20.0);
    confocal = std::max(confocal, commute_gap(e1, e2, p));
    concentric = std::max(concentric, commute_gap(c1, c2, p));
  }
  res.report["confocal_pair"] = {e1.spec(), e2.spec()};
  res.report["confocal_max_gap"] = confocal;
  res.report["concentric_max_gap"] = concentric;
  res.report["points"] = 32;
  res.report["seed"] = cfg.seed;
  return finish(std::move(res), confocal > 1e-3 && concentric < 1e-10, confocal, 1e-3,
                fmt::format("confocal gap {:.3g}, concentric gap {:.3g}", confocal, concentric));
}

// 15. Normal form in Lazutkin-style coordinates.
CheckResult check_normal_form(const CheckConfig& cfg, CheckResult res) {
  const auto specs = or_default(cfg.tables, {"ellipse:a=2,b=1", "lp:p=1.5", "fourier:c0=1,a2=0.05,b3=0.02"});
  constexpr std::size_t kGrid = 64;
  constexpr double rho0 = 1e-3, rho1 = 5e-4;
  bool pass = true;
  double worst_ratio = 0.0;
  Json per = Json::array();
  for (const auto& spec : specs) {
    const Oval table = parse_table(spec);
    const InfinityChart single = infinity_chart(table, kGrid, 1);
    const double f_max = max_of(single.f);
    const InfinityChart dbl = infinity_chart(table, kGrid, 2);
    std::vector<double> u = dbl.alphas, f = dbl.f, g = dbl.g;
    u.push_back(kTwoPi);
    f.push_back(f.front());
    g.push_back(g.front());
    const LazutkinTables lz = lazutkin_change(u, f, g);
    struct Sup {
      double x0, x1, y0, y1;
    };
    const auto sups = num::parallel_map<Sup>(kGrid, [&](std::size_t i) {
      const NormalFormSample s0 = normal_form_sample(table, u[i], lz.b[i], rho0);
      const NormalFormSample s1 = normal_form_sample(table, u[i], lz.b[i], rho1);
      return Sup{s0.x_defect, s1.x_defect, s0.y_defect, s1.y_defect};
    });
    Sup m{0, 0, 0, 0};
    for (const Sup& s : sups) {
      m.x0 = std::max(m.x0, s.x0);
      m.x1 = std::max(m.x1, s.x1);
      m.y0 = std::max(m.y0, s.y0);
      m.y1 = std::max(m.y1, s.y1);
    }
    const double ratio = std::max(m.x1 / m.x0, m.y1 / m.y0);
    const bool ok = f_max < 0 && ratio < 2.0;
    pass = pass && ok;
    worst_ratio = std::max(worst_ratio, ratio);
    per.push_back({{"table", spec},
                   {"max_f", f_max},
                   {"x_defect", {m.x0, m.x1}},
                   {"y_defect", {m.y0, m.y1}},
                   {"growth", ratio},
                   {"pass", ok}});
  }
  res.report["rho"] = {rho0, rho1};
  res.report["grid"] = kGrid;
  res.report["tables"] = per;
  return finish(std::move(res), pass, worst_ratio, 2.0, fmt::format("max defect growth {:.3g}", worst_ratio));
}

using CheckFn = CheckResult (*)(const CheckConfig&, CheckResult);

struct Entry {
  CheckInfo info;
  CheckFn fn;
  double time_limit = 0.0;  // seconds; 0 means unbounded
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"circle", 1, "circle table: step is rotation by 2 arccos(1/R)"}, check_circle, 1.0},
      {{"confocal", 2, "ellipse table: focal sum is invariant"}, check_confocal, 10.0},
      {{"main1", 3, "F^2 - Phi decays like 1/r"}, check_main1, 120.0},
      {{"derivatives", 4, "generating-function derivatives and twist"}, check_derivatives},
      {{"area_form", 5, "invariant area form"}, check_area_form},
      {{"form_limit", 6, "form factor tends to 4/w"}, check_form_limit},
      {{"hausdorff", 7, "E_t is within e^-t/2 of C_t"}, check_hausdorff},
      {{"poncelet", 8, "Poncelet double step turns by 4 sin a / r"}, check_poncelet},
      {{"segment", 9, "segment map and thin ellipses"}, check_segment},
      {{"measure", 10, "invariant measures on confocal ellipses"}, check_measure},
      {{"periodic", 11, "periodic orbits on circle and ellipse"}, check_periodic},
      {{"centers", 12, "auxiliary-circle centres at infinity"}, check_centers},
      {{"stability", 13, "confinement of far orbits"}, check_stability},
      {{"commute", 14, "maps of different tables do not commute"}, check_commute},
      {{"normal_form", 15, "normal form in Lazutkin coordinates"}, check_normal_form},
  };
  return list;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CheckResult run_check(std::string_view name, const CheckConfig& config) {
  for (const auto& e : entries()) {
    if (e.info.name != name) continue;
    CheckResult res;
    res.name = std::string(name);
    res.criterion = e.info.criterion;
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult out = e.fn(config, res);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Elapsed time stays out of the JSON report so reruns are byte-identical.
    if (e.time_limit > 0 && out.seconds >= e.time_limit) {
      out.pass = false;
      out.summary += fmt::format("; took {:.1f} s, limit {:.0f} s", out.seconds, e.time_limit);
    }
    out.report["check"] = out.name;
    out.report["criterion"] = out.criterion;
    out.report["params"] = {{"seed", config.seed},
                            {"tables", config.tables},
                            {"radii", config.radii},
                            {"t", config.t_values}};
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, fmt::format("unknown check '{}'", name));
}

}  // namespace olb

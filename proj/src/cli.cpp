#include "olb/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <ostream>
#include <sstream>

#include "olb/centers.hpp"
#include "olb/checks.hpp"
#include "olb/error.hpp"
#include "olb/periodic.hpp"
#include "olb/report.hpp"

namespace olb {

namespace {

struct Options {
  std::string table;
  std::vector<double> start;
  std::size_t steps = 1000;
  int stride = 1;
  std::size_t records = 2000;
  bool odd = false;
  int k = 5;
  int m = 1;
  int k_max = 9;
  bool all_m = false;
  std::string check;
  std::vector<std::string> tables;
  std::vector<double> radii;
  std::vector<double> t_values;
  std::uint64_t seed = CheckConfig{}.seed;
  std::string out;
  std::string svg;
};

// Writes to the named file, or to `fallback` when the name is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", path));
  f << text;
}

Vec2 start_point(const Options& o, const Oval& table) {
  if (o.start.empty()) return table.origin() + Vec2{30.0, 0.0};
  return {o.start[0], o.start[1]};
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const Oval table = parse_table(o.table);
  const auto rows = orbit_rows(table, start_point(o, table), o.steps, o.stride);
  std::ostringstream csv;
  write_orbit_csv(csv, rows);
  emit(o.out, csv.str(), out);
  if (!o.svg.empty()) {
    std::vector<Vec2> pts;
    for (const auto& r : rows) pts.push_back(r.point);
    emit(o.svg, render_svg(pts, table_outline(table)), out);
  }
  return kExitOk;
}

int cmd_centers(const Options& o, std::ostream& out) {
  const Oval table = parse_table(o.table);
  const Vec2 x0 = o.start.empty() ? table.origin() + Vec2{1000.0, 0.0} : start_point(o, table);
  const CenterTrace trace = rescaled_center_orbit(table, x0, o.records, o.odd);
  std::ostringstream csv;
  write_centers_csv(csv, table, trace);
  emit(o.out, csv.str(), out);
  if (!o.svg.empty()) {
    std::vector<Vec2> pts;
    for (const auto& r : trace.records) pts.push_back(r.rescaled);
    emit(o.svg, render_svg(pts, {}, SvgStyle{.connect = false}), out);
  }
  return kExitOk;
}

int cmd_periodic(const Options& o, std::ostream& out) {
  const Oval table = parse_table(o.table);
  const PeriodicOrbit orb = find_periodic(table, o.k, o.m);
  emit(o.out, periodic_json(orb, verify_periodic(table, orb)).dump(2) + "\n", out);
  if (!o.svg.empty()) {
    std::vector<Vec2> pts = orb.vertices;
    pts.push_back(pts.front());
    emit(o.svg, render_svg(pts, table_outline(table)), out);
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Oval table = parse_table(o.table);
  const PeriodScan scan = period_radius_scan(table, o.k_max, !o.all_m);
  Json j;
  j["table"] = table.spec();
  j["k_max"] = o.k_max;
  j["coprime_only"] = !o.all_m;
  Json cells = Json::array();
  for (const auto& c : scan.cells) {
    Json cell{{"k", c.k}, {"m", c.m}};
    if (c.max_radius) {
      cell["max_radius"] = *c.max_radius;
    } else {
      cell["failure"] = c.failure;
    }
    cells.push_back(cell);
  }
  j["cells"] = cells;
  Json by_k = Json::object();
  for (int k = 3; k <= o.k_max; ++k) {
    if (scan.max_radius_by_k[k]) by_k[std::to_string(k)] = *scan.max_radius_by_k[k];
  }
  j["max_radius_by_k"] = by_k;
  emit(o.out, j.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  CheckConfig cfg;
  cfg.tables = o.tables;
  if (!o.table.empty()) cfg.tables.insert(cfg.tables.begin(), o.table);
  cfg.radii = o.radii;
  cfg.t_values = o.t_values;
  cfg.seed = o.seed;

  std::vector<std::string> names;
  if (o.check == "all") {
    for (const auto& c : check_catalog()) names.emplace_back(c.name);
  } else {
    names.push_back(o.check);
  }
  bool all = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const CheckResult r = run_check(name, cfg);
    err << fmt::format("{} {}: {}\n", r.pass ? "PASS" : "FAIL", r.name, r.summary);
    all = all && r.pass;
    reports.push_back(r.report);
  }
  const Json& doc = names.size() == 1 ? reports.front() : reports;
  emit(o.out, doc.dump(2) + "\n", out);
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outer length billiards: orbits, scans and verification checks", "olb"};
  app.require_subcommand(1);
  Options o;

  auto add_table = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--table", o.table, "table spec, e.g. ellipse:a=2,b=1");
    if (required) opt->required();
  };
  auto add_start = [&](CLI::App* sub) {
    sub->add_option("--start", o.start, "start point x,y")->delimiter(',')->expected(2);
  };
  auto add_outputs = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "report path (default: stdout)");
    sub->add_option("--svg", o.svg, "SVG figure path");
  };

  auto* orbit = app.add_subcommand("orbit", "iterate the map and write a CSV trace");
  add_table(orbit, true);
  add_start(orbit);
  orbit->add_option("--steps", o.steps, "number of rows after the start");
  orbit->add_option("--stride", o.stride, "map applications per row")->check(CLI::IsMember({1, 2}));
  add_outputs(orbit);

  auto* centers = app.add_subcommand("centers", "rescaled auxiliary-circle centres along an orbit");
  add_table(centers, true);
  add_start(centers);
  centers->add_option("--records", o.records, "number of recorded centres");
  centers->add_flag("--odd", o.odd, "record odd steps instead of even ones");
  add_outputs(centers);

  auto* periodic = app.add_subcommand("periodic", "find a periodic orbit of minimal perimeter");
  add_table(periodic, true);
  periodic->add_option("--k", o.k, "period")->check(CLI::PositiveNumber);
  periodic->add_option("--m", o.m, "rotation number")->check(CLI::PositiveNumber);
  add_outputs(periodic);

  auto* sweep = app.add_subcommand("sweep", "largest periodic-orbit radius for each period");
  add_table(sweep, true);
  sweep->add_option("--k-max", o.k_max, "largest period")->check(CLI::Range(3, 64));
  sweep->add_flag("--all-m", o.all_m, "include rotation numbers sharing a factor with k");
  sweep->add_option("--out", o.out, "report path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run an acceptance check");
  std::vector<std::string> names{"all"};
  for (const auto& c : check_catalog()) names.emplace_back(c.name);
  verify->add_option("check", o.check, "check name or 'all'")->required()->check(CLI::IsMember(names));
  add_table(verify, false);
  verify->add_option("--radii", o.radii, "radii override")->delimiter(',');
  verify->add_option("--t", o.t_values, "t values override")->delimiter(',');
  verify->add_option("--seed", o.seed, "seed for random sampling");
  verify->add_option("--out", o.out, "JSON report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, msg;
    const int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*orbit) return cmd_orbit(o, out);
    if (*centers) return cmd_centers(o, out);
    if (*periodic) return cmd_periodic(o, out);
    if (*sweep) return cmd_sweep(o, out);
    return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "olb: " << e.what() << "\n";
    return is_numerical(e.code()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    err << "olb: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace olb

#include "olb/periodic.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>
#include <random>

#include "olb/error.hpp"
#include "olb/numerics.hpp"
#include "olb/olbmap.hpp"

namespace olb {

namespace {

// Derivative of the perimeter with respect to alpha_i, in angle units; it is
// the gap between the two circles inscribed at x_i (see olbmap.hpp).
double coordinate_gradient(const Oval& oval, double prev, double s, double next) {
  return inscribed_radius_after(oval, prev, s) - inscribed_radius_before(oval, s, next);
}

double solve_coordinate(const Oval& oval, double prev, double cur, double next) {
  const double lo = std::max(prev, next - kPi);
  const double hi = std::min(prev + kPi, next);
  if (!(hi > lo)) {
    throw Error(ErrorCode::DegenerateConfig, fmt::format("neighbour gap {} leaves no admissible tangent", next - prev));
  }
  auto g = [&](double s) { return coordinate_gradient(oval, prev, s, next); };
  // g < 0 near lo and g > 0 near hi; step the ends inwards until that shows.
  double inset = 1e-3 * (hi - lo);
  double a = lo + inset, b = hi - inset;
  while (!(g(a) < 0 && g(b) > 0)) {
    inset *= 0.5;
    if (inset < 1e-12 * (hi - lo)) {
      throw Error(ErrorCode::DegenerateConfig, "coordinate equation has no sign change");
    }
    a = lo + inset;
    b = hi - inset;
  }
  if (cur > a && cur < b) {
    // Keep the bracket tight around the current value when possible.
    const double gc = g(cur);
    if (gc == 0.0) return cur;
    (gc < 0 ? a : b) = cur;
  }
  num::RootOptions opts;
  opts.ftol = 1e-14 * std::max(1.0, oval.diameter());
  return num::solve_bracketed(std::function<double(double)>(g), a, b, opts).x;
}

double lifted(const std::vector<double>& al, int i, double turn) {
  const int k = static_cast<int>(al.size());
  if (i < 0) return al[i + k] - turn;
  if (i >= k) return al[i - k] + turn;
  return al[i];
}

}  // namespace

PeriodicOrbit find_periodic(const Oval& oval, int k, int m, const PeriodicOptions& opts) {
  if (k < 3 || m < 1 || 2 * m >= k) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("need k >= 3 and 1 <= m < k/2, got k={}, m={}", k, m));
  }
  const double turn = kTwoPi * m;
  PeriodicOrbit orb;
  orb.k = k;
  orb.m = m;
  orb.alphas.resize(k);
  for (int i = 0; i < k; ++i) orb.alphas[i] = turn * i / k;

  auto grad_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
      const double gi = coordinate_gradient(oval, lifted(orb.alphas, i - 1, turn), orb.alphas[i],
                                            lifted(orb.alphas, i + 1, turn));
      s += gi * gi;
    }
    return std::sqrt(s);
  };

  double gn = grad_norm();
  int sweep = 0;
  while (gn >= opts.gradient_tol) {
    if (sweep == opts.max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  fmt::format("k={}, m={}: gradient norm {} after {} sweeps", k, m, gn, sweep));
    }
    for (int i = 0; i < k; ++i) {
      orb.alphas[i] = solve_coordinate(oval, lifted(orb.alphas, i - 1, turn), orb.alphas[i],
                                       lifted(orb.alphas, i + 1, turn));
    }
    ++sweep;
    gn = grad_norm();
  }
  orb.sweeps = sweep;

  orb.vertices.resize(k);
  for (int i = 0; i < k; ++i) {
    const double a = orb.alphas[i], b = lifted(orb.alphas, i + 1, turn);
    orb.vertices[i] = support_intersection(oval, a, b);
    orb.perimeter += generating(oval, a, b).value;
    orb.residual = std::max(orb.residual, std::abs(generating_relation_residual(
                                              oval, lifted(orb.alphas, i - 1, turn), a, b)));
  }
  return orb;
}

double verify_periodic(const Oval& oval, const PeriodicOrbit& orbit) {
  const std::size_t k = orbit.vertices.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    worst = std::max(worst, distance(apply(oval, orbit.vertices[i]), orbit.vertices[(i + 1) % k]));
  }
  return worst;
}

PeriodicOrbit jitter(const PeriodicOrbit& orbit, double amount, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amount, amount);
  PeriodicOrbit out = orbit;
  for (auto& v : out.vertices) v += Vec2{u(rng), u(rng)};
  return out;
}

PeriodScan period_radius_scan(const Oval& oval, int k_max, bool coprime_only) {
  if (k_max < 3) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 3");
  std::vector<std::pair<int, int>> km;
  for (int k = 3; k <= k_max; ++k) {
    for (int m = 1; 2 * m < k; ++m) {
      if (!coprime_only || std::gcd(k, m) == 1) km.emplace_back(k, m);
    }
  }
  PeriodScan scan;
  scan.cells = num::parallel_map<ScanCell>(km.size(), [&](std::size_t i) {
    ScanCell c{km[i].first, km[i].second, std::nullopt, {}};
    try {
      const PeriodicOrbit orb = find_periodic(oval, c.k, c.m);
      double r = 0.0;
      for (const Vec2& v : orb.vertices) r = std::max(r, distance(v, oval.origin()));
      c.max_radius = r;
    } catch (const Error& e) {
      c.failure = e.what();
    }
    return c;
  });
  scan.max_radius_by_k.assign(k_max + 1, std::nullopt);
  for (const auto& c : scan.cells) {
    if (!c.max_radius) continue;
    auto& slot = scan.max_radius_by_k[c.k];
    slot = slot ? std::max(*slot, *c.max_radius) : *c.max_radius;
  }
  return scan;
}

}  // namespace olb

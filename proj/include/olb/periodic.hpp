#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olb/geometry.hpp"

namespace olb {

/// Circumscribed k-gon winding m times whose perimeter is critical.
struct PeriodicOrbit {
  int k = 0;
  int m = 0;
  std::vector<double> alphas;  // lifted: alphas[i+1] > alphas[i], total turn 2 pi m
  std::vector<Vec2> vertices;  // vertices[i] = support_intersection(alphas[i], alphas[i+1])
  double perimeter = 0.0;
  double residual = 0.0;  // max cyclic generating-relation residual
  int sweeps = 0;
};

struct PeriodicOptions {
  double gradient_tol = 1e-10;
  int max_sweeps = 500;
};

PeriodicOrbit find_periodic(const Oval& oval, int k, int m, const PeriodicOptions& opts = {});

/// max_i |F(vertex_i) - vertex_{i+1}|.
double verify_periodic(const Oval& oval, const PeriodicOrbit& orbit);

/// Same orbit with every vertex jittered by up to `amount` (seeded).
PeriodicOrbit jitter(const PeriodicOrbit& orbit, double amount, unsigned long long seed);

struct ScanCell {
  int k = 0;
  int m = 0;
  std::optional<double> max_radius;
  std::string failure;
};

struct PeriodScan {
  std::vector<ScanCell> cells;
  /// Per k, the largest vertex radius over all found m (nullopt if none).
  std::vector<std::optional<double>> max_radius_by_k;  // index k
};

/// Scans 3 <= k <= k_max. With `coprime_only`, m shares no factor with k.
PeriodScan period_radius_scan(const Oval& oval, int k_max, bool coprime_only = true);

}  // namespace olb

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "olb/report.hpp"

namespace olb {

/// Overrides for a check's pinned defaults; empty fields keep the defaults.
struct CheckConfig {
  std::vector<std::string> tables;
  std::vector<double> radii;
  std::vector<double> t_values;
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  bool pass = false;
  double value = 0.0;  // headline metric compared against `bound`
  double bound = 0.0;
  std::string summary;
  Json report;  // full parameters and measurements
  double seconds = 0.0;
};

struct CheckInfo {
  std::string_view name;
  int criterion;
  std::string_view description;
};

/// All checks in criterion order.
const std::vector<CheckInfo>& check_catalog();

/// Runs one check by name. Throws InvalidArgument for an unknown name.
CheckResult run_check(std::string_view name, const CheckConfig& config = {});

}  // namespace olb

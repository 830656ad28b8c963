#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace olb {

enum class ErrorCode {
  InvalidArgument,
  InvalidOval,
  ParseError,
  PointInsideCurve,
  OriginOutside,
  NoCircle,
  BranchAmbiguity,
  NoRoot,
  ParallelTangents,
  OnAxis,
  NonPositiveT,
  OffCurve,
  AtOrigin,
  TooFewPoints,
  TooShort,
  ExtrapolationUnstable,
  SingularF,
  NoConvergence,
  DegenerateConfig,
  NotPeriodic,
  EmptyInput,
};

std::string_view to_string(ErrorCode code);

/// Numerical failures are "non-convergence" for the CLI exit code; the rest
/// are usage or domain errors.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An error raised while iterating a map, tagged with the failing step index.
class OrbitError : public Error {
 public:
  OrbitError(std::size_t index, const Error& cause)
      : Error(cause.code(), "step " + std::to_string(index) + ": " + cause.what()), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace olb

#include "olb/error.hpp"

namespace olb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidOval: return "InvalidOval";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PointInsideCurve: return "PointInsideCurve";
    case ErrorCode::OriginOutside: return "OriginOutside";
    case ErrorCode::NoCircle: return "NoCircle";
    case ErrorCode::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::ParallelTangents: return "ParallelTangents";
    case ErrorCode::OnAxis: return "OnAxis";
    case ErrorCode::NonPositiveT: return "NonPositiveT";
    case ErrorCode::OffCurve: return "OffCurve";
    case ErrorCode::AtOrigin: return "AtOrigin";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::ExtrapolationUnstable: return "ExtrapolationUnstable";
    case ErrorCode::SingularF: return "SingularF";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateConfig: return "DegenerateConfig";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoCircle:
    case ErrorCode::BranchAmbiguity:
    case ErrorCode::NoRoot:
    case ErrorCode::ExtrapolationUnstable:
    case ErrorCode::SingularF:
    case ErrorCode::NoConvergence:
    case ErrorCode::DegenerateConfig:
    case ErrorCode::NotPeriodic:
      return true;
    default:
      return false;
  }
}

}  // namespace olb

#include "curvesing/error.hpp"

namespace curvesing {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInternal:
      return "internal";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kDegenerate:
      return "degenerate";
    case ErrorCode::kGenericity:
      return "genericity";
    case ErrorCode::kStepBudget:
      return "step_budget";
    case ErrorCode::kInvalidArgument:
      return "invalid_argument";
  }
  return "unknown";
}

}  // namespace curvesing

#pragma once

#include <stdexcept>
#include <string>

namespace curvesing {

// Numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kInternal = 1,
  kParse = 2,
  kDegenerate = 3,
  kGenericity = 4,
  kStepBudget = 5,
  kInvalidArgument = 6,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what)
      : Error(ErrorCode::kDegenerate, what) {}
};

class GenericityFailure : public Error {
 public:
  explicit GenericityFailure(const std::string& what)
      : Error(ErrorCode::kGenericity, what) {}
};

class StepBudgetExceeded : public Error {
 public:
  explicit StepBudgetExceeded(const std::string& what)
      : Error(ErrorCode::kStepBudget, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

}  // namespace curvesing

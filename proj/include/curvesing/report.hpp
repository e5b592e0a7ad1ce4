#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "curvesing/error.hpp"
#include "curvesing/germ_file.hpp"

namespace curvesing {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::uint64_t seed = 0;
  unsigned trials = 2;
  unsigned max_retries = 5;
  std::uint64_t step_budget = 1'000'000;
  OutputFormat format = OutputFormat::kText;
  // Overrides the samples listed in the file.
  std::optional<std::vector<Rational>> samples;
  std::optional<ConstMatrix> ci_matrix;
  bool timings = false;
};

struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
  std::string body;
};

inline constexpr int kSchemaVersion = 1;

const std::vector<std::string>& known_commands();

// Never throws: failures become an {"error": ...} report with a nonzero exit code.
RunResult run_command(std::string_view command, const GermFile& file, const RunConfig& config);
RunResult run_command(std::string_view command, std::string_view file_text, const RunConfig& config);

RunResult error_result(int exit_code, std::string_view code_name, std::string_view message,
                       OutputFormat format);
int exit_code_for(ErrorCode code) noexcept;

std::string render(const nlohmann::ordered_json& report, OutputFormat format);

}  // namespace curvesing

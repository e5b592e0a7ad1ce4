#include "curvesing/curvesing.h"

#include <algorithm>
#include <functional>
#include <string>

#include "curvesing/error.hpp"
#include "curvesing/report.hpp"

struct csg_germ {
  curvesing::GermFile file;
};

struct csg_result {
  curvesing::RunResult run;
};

namespace {

thread_local std::string last_error;

csg_status fail(csg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

curvesing::RunConfig to_run_config(const csg_config& c) {
  curvesing::RunConfig out;
  out.seed = c.seed;
  out.trials = c.trials;
  out.max_retries = c.max_retries;
  out.step_budget = c.step_budget;
  out.format = c.format == CSG_FORMAT_JSON ? curvesing::OutputFormat::kJson : curvesing::OutputFormat::kText;
  out.timings = c.timings != 0;
  if (c.samples) {
    std::vector<curvesing::Rational> samples;
    std::string text(c.samples);
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      samples.push_back(curvesing::parse_rational(text.substr(start, comma - start)));
      start = comma + 1;
    }
    out.samples = std::move(samples);
  }
  if (c.ci_matrix) out.ci_matrix = curvesing::ConstMatrix::parse(c.ci_matrix);
  return out;
}

csg_status run_with(const csg_config* config, csg_result** out,
                    const std::function<curvesing::RunResult(const curvesing::RunConfig&)>& body) {
  if (!out) return fail(CSG_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  csg_config defaults;
  csg_config_init(&defaults);
  const csg_config& c = config ? *config : defaults;
  try {
    curvesing::RunConfig rc;
    try {
      rc = to_run_config(c);
    } catch (const curvesing::Error& e) {
      const auto format = c.format == CSG_FORMAT_JSON ? curvesing::OutputFormat::kJson
                                                      : curvesing::OutputFormat::kText;
      *out = new csg_result{curvesing::error_result(curvesing::exit_code_for(e.code()),
                                                    curvesing::error_code_name(e.code()), e.what(), format)};
      last_error = e.what();
      return static_cast<csg_status>(e.code());
    }
    *out = new csg_result{body(rc)};
    last_error.clear();
    if ((*out)->run.exit_code != 0) last_error = (*out)->run.report["error"]["message"].get<std::string>();
    return CSG_OK;
  } catch (const std::exception& e) {
    return fail(CSG_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

void csg_config_init(csg_config* config) {
  if (!config) return;
  const curvesing::RunConfig d;
  config->seed = d.seed;
  config->trials = d.trials;
  config->max_retries = d.max_retries;
  config->step_budget = d.step_budget;
  config->format = CSG_FORMAT_TEXT;
  config->samples = nullptr;
  config->ci_matrix = nullptr;
  config->timings = 0;
}

csg_status csg_germ_parse(const char* text, size_t length, csg_germ** out) {
  if (!out) return fail(CSG_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (!text && length) return fail(CSG_ERR_INVALID_ARGUMENT, "null text");
  try {
    *out = new csg_germ{curvesing::parse_germ_file(std::string_view(text ? text : "", length))};
    last_error.clear();
    return CSG_OK;
  } catch (const curvesing::Error& e) {
    return fail(static_cast<csg_status>(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(CSG_ERR_INTERNAL, e.what());
  }
}

void csg_germ_free(csg_germ* germ) { delete germ; }

csg_status csg_run(const csg_germ* germ, const char* command, const csg_config* config, csg_result** out) {
  if (!germ || !command) {
    if (out) *out = nullptr;
    return fail(CSG_ERR_INVALID_ARGUMENT, "null germ or command");
  }
  return run_with(config, out, [&](const curvesing::RunConfig& rc) {
    return curvesing::run_command(command, germ->file, rc);
  });
}

csg_status csg_run_source(const char* text, size_t length, const char* command, const csg_config* config,
                          csg_result** out) {
  if ((!text && length) || !command) {
    if (out) *out = nullptr;
    return fail(CSG_ERR_INVALID_ARGUMENT, "null text or command");
  }
  const std::string_view source(text ? text : "", length);
  return run_with(config, out, [&](const curvesing::RunConfig& rc) {
    return curvesing::run_command(command, source, rc);
  });
}

const char* csg_result_body(const csg_result* result) { return result ? result->run.body.c_str() : ""; }

int csg_result_exit_code(const csg_result* result) {
  return result ? result->run.exit_code : static_cast<int>(CSG_ERR_INVALID_ARGUMENT);
}

csg_status csg_result_get_int(const csg_result* result, const char* key, int64_t* value) {
  if (!result || !key || !value) return fail(CSG_ERR_INVALID_ARGUMENT, "null argument");
  const auto& report = result->run.report;
  const auto it = report.find(key);
  if (it == report.end() || !it->is_number_integer()) {
    return fail(CSG_ERR_INVALID_ARGUMENT, std::string("no integer field '") + key + "'");
  }
  *value = it->get<int64_t>();
  return CSG_OK;
}

void csg_result_free(csg_result* result) { delete result; }

const char* csg_last_error(void) { return last_error.c_str(); }

const char* csg_status_string(csg_status status) {
  switch (status) {
    case CSG_OK:
      return "ok";
    case CSG_ERR_INTERNAL:
    case CSG_ERR_PARSE:
    case CSG_ERR_DEGENERATE:
    case CSG_ERR_GENERICITY:
    case CSG_ERR_STEP_BUDGET:
    case CSG_ERR_INVALID_ARGUMENT:
      return curvesing::error_code_name(static_cast<curvesing::ErrorCode>(status));
  }
  return "unknown";
}

const char* csg_version(void) { return "0.1.0"; }

}  // extern "C"

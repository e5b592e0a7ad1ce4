#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "curvesing/curvesing.h"

int main(int argc, char** argv) {
  CLI::App app{"Singularity invariants of curve germs"};
  app.set_version_flag("--version", csg_version());

  csg_config config;
  csg_config_init(&config);
  std::string command;
  std::string path;
  std::string samples;
  std::string ci_matrix;
  bool json = false;
  bool timings = false;

  app.add_option("command", command, "invariants | milnor | family | whitney | oracle | colength")->required();
  app.add_option("file", path, "germ file")->required();
  app.add_option("--seed", config.seed, "base seed");
  app.add_option("--trials", config.trials, "independent trials, at least 2");
  app.add_option("--max-retries", config.max_retries, "redraws after a failed or disputed trial");
  app.add_option("--step-budget", config.step_budget, "reduction steps per basis computation");
  app.add_option("--samples", samples, "comma-separated parameter values, overriding the file");
  app.add_option("--ci-matrix", ci_matrix, "matrix defining Z, rows separated by ';'");
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--timings", timings, "include timings_ms");
  CLI11_PARSE(app, argc, argv);

  config.format = json ? CSG_FORMAT_JSON : CSG_FORMAT_TEXT;
  config.timings = timings ? 1 : 0;
  if (!samples.empty()) config.samples = samples.c_str();
  if (!ci_matrix.empty()) config.ci_matrix = ci_matrix.c_str();

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return CSG_ERR_PARSE;
  }
  std::ostringstream text;
  text << in.rdbuf();
  const std::string source = text.str();

  csg_result* result = nullptr;
  const csg_status status = csg_run_source(source.data(), source.size(), command.c_str(), &config, &result);
  if (!result) {
    std::cerr << csg_status_string(status) << ": " << csg_last_error() << "\n";
    return status == CSG_OK ? CSG_ERR_INTERNAL : status;
  }
  const int code = csg_result_exit_code(result);
  std::fputs(csg_result_body(result), stdout);
  csg_result_free(result);
  return code;
}

#include "curvesing/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "curvesing/error.hpp"
#include "curvesing/oracle.hpp"

namespace curvesing {

namespace {

using Json = nlohmann::ordered_json;

Json header(std::string_view command, const GermFile& file) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = std::string(command);
  j["input_digest"] = input_digest(file.source);
  return j;
}

InvariantConfig invariant_config(const RunConfig& c) {
  InvariantConfig out;
  out.seed = c.seed;
  out.trials = c.trials;
  out.max_retries = c.max_retries;
  out.engine.step_budget = c.step_budget;
  out.ci_matrix = c.ci_matrix;
  return out;
}

std::vector<Rational> samples_for(const GermFile& file, const RunConfig& config,
                                  std::vector<Rational> fallback) {
  if (config.samples) return *config.samples;
  if (!file.samples.empty()) return file.samples;
  return fallback;
}

Json milnor_fields(Json j, const InvariantReport& r) {
  j["m"] = r.m;
  j["e_jac"] = r.e_jac;
  j["i0"] = r.i0;
  j["mu"] = r.mu;
  j["polar_degree"] = r.polar_degree;
  j["w0_generators"] = r.w0_generators;
  j["ci_matrix"] = r.ci_matrix;
  j["single_quotient_sufficed"] = r.single_quotient_sufficed;
  if (r.e_reduction) j["e_reduction"] = *r.e_reduction;
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    trials.push_back(Json{{"seed", t.seed}, {"m", t.m}, {"e_jac", t.e_jac}, {"i0", t.i0}});
  }
  j["trials"] = std::move(trials);
  j["agreement"] = r.agreement;
  j["smoothability_assumed"] = true;
  j["reducedness_verified"] = false;
  return j;
}

Json run_milnor(std::string_view command, const GermFile& file, const RunConfig& config) {
  const InvariantConfig ic = invariant_config(config);
  const CurveGerm x = file.curve(ic.engine);
  Json j = header(command, file);
  if (command == "invariants") {
    j["ring"] = x.ring();
    std::vector<std::string> eqs;
    for (const auto& e : x.equations()) eqs.push_back(e.to_string(x.ring()));
    j["equations"] = eqs;
    j["jacobian_minor_count"] = minors_of_size(jacobian_matrix(x.equations()), x.nvars() - 1).size();
  }
  return milnor_fields(std::move(j), milnor_number(x, ic));
}

Json run_family(std::string_view command, const GermFile& file, const RunConfig& config) {
  const auto samples = samples_for(file, config, {Rational(1)});
  const FamilyProfile p = family_profile(file.family(), samples, invariant_config(config));
  Json j = header(command, file);
  j["ci_matrix"] = p.a.to_string();
  Json rows = Json::array();
  for (const auto& r : p.rows) {
    rows.push_back(Json{{"t", r.t.get_str()},
                        {"global_number", r.global_number},
                        {"points", r.points},
                        {"transversal", r.transversal},
                        {"link_growth_steps", r.link_growth_steps}});
  }
  j["samples"] = std::move(rows);
  j["constant"] = p.constant;
  return j;
}

Json run_whitney(std::string_view command, const GermFile& file, const RunConfig& config) {
  const auto samples = samples_for(file, config, {Rational(0), Rational(1)});
  const WhitneyVerdict v = whitney_check(file.family(), samples, invariant_config(config));
  Json j = header(command, file);
  Json rows = Json::array();
  for (const auto& r : v.rows) {
    rows.push_back(Json{{"t", r.t.get_str()}, {"e", r.e_jac}, {"i0", r.i0}, {"difference", r.difference}});
  }
  j["samples"] = std::move(rows);
  j["verdict"] = v.constant ? "CONSTANT" : "NOT CONSTANT";
  if (v.constant) j["difference"] = v.rows.front().difference;
  j["smoothability_assumed"] = true;
  return j;
}

Json run_oracle(std::string_view command, const GermFile& file, const RunConfig&) {
  if (file.parametrization.empty()) throw InvalidArgument("the oracle command needs a parametrization");
  std::vector<std::uint64_t> generators;
  for (const auto& p : file.parametrization_at_zero()) {
    if (p.is_zero()) continue;
    if (p.size() != 1) throw DegenerateInput("the oracle needs a monomial parametrization");
    const unsigned a = p.terms().front().mono[0];
    if (a == 0) throw DegenerateInput("the parametrization does not pass through the origin");
    generators.push_back(a);
  }
  const SemigroupDelta d = semigroup_delta(generators);
  Json j = header(command, file);
  j["generators"] = generators;
  j["delta"] = d.delta;
  j["gaps"] = d.gaps;
  j["branches"] = 1;
  j["mu"] = milnor_from_delta(d.delta, 1);
  return j;
}

Json colength_value(const Colength& c) { return c ? Json(*c) : Json("infinite"); }

Json run_colength(std::string_view command, const GermFile& file, const RunConfig& config) {
  EngineOptions opts;
  opts.step_budget = config.step_budget;
  const Ideal i = file.ideal(opts);
  Json j = header(command, file);
  j["ring"] = i.ring();
  j["local"] = colength_value(origin_colength(i, opts));
  j["global"] = colength_value(colength(i, ColengthMode::kGlobal, opts));
  return j;
}

using Handler = std::function<Json(std::string_view, const GermFile&, const RunConfig&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"invariants", run_milnor}, {"milnor", run_milnor},   {"family", run_family},
      {"whitney", run_whitney},   {"oracle", run_oracle},   {"colength", run_colength},
  };
  return table;
}

void render_text(std::ostream& out, const Json& j, const std::string& indent);

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& a) {
  return std::all_of(a.begin(), a.end(), [](const Json& v) { return v.is_primitive(); });
}

void render_text(std::ostream& out, const Json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(out, value, indent + "  ");
    } else if (value.is_array() && all_scalars(value)) {
      out << indent << key << ":";
      for (std::size_t k = 0; k < value.size(); ++k) out << (k ? ", " : " ") << scalar_text(value[k]);
      out << "\n";
    } else if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        out << indent << "  -";
        for (const auto& [k, v] : item.items()) out << " " << k << "=" << scalar_text(v);
        out << "\n";
      }
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

RunResult finish(Json report, int exit_code, OutputFormat format) {
  RunResult r;
  r.exit_code = exit_code;
  r.body = render(report, format);
  r.report = std::move(report);
  return r;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

int exit_code_for(ErrorCode code) noexcept {
  return code == ErrorCode::kInvalidArgument ? static_cast<int>(ErrorCode::kParse) : static_cast<int>(code);
}

std::string render(const Json& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(out, report, "");
  return out.str();
}

RunResult error_result(int exit_code, std::string_view code_name, std::string_view message,
                       OutputFormat format) {
  Json j;
  j["error"] = Json{{"code", std::string(code_name)}, {"message", std::string(message)}};
  return finish(std::move(j), exit_code, format);
}

RunResult run_command(std::string_view command, const GermFile& file, const RunConfig& config) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) {
    return error_result(exit_code_for(ErrorCode::kInvalidArgument), error_code_name(ErrorCode::kInvalidArgument),
                        "unknown command '" + std::string(command) + "'", config.format);
  }
  if (config.trials < 2) {
    return error_result(exit_code_for(ErrorCode::kInvalidArgument), error_code_name(ErrorCode::kInvalidArgument),
                        "trials must be at least 2", config.format);
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    Json j = it->second(command, file, config);
    if (config.timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      j["timings_ms"] = Json{{"total", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};
    }
    return finish(std::move(j), 0, config.format);
  } catch (const Error& e) {
    return error_result(exit_code_for(e.code()), error_code_name(e.code()), e.what(), config.format);
  } catch (const std::exception& e) {
    return error_result(exit_code_for(ErrorCode::kInternal), error_code_name(ErrorCode::kInternal), e.what(),
                        config.format);
  }
}

RunResult run_command(std::string_view command, std::string_view file_text, const RunConfig& config) {
  GermFile file;
  try {
    file = parse_germ_file(file_text);
  } catch (const Error& e) {
    return error_result(exit_code_for(e.code()), error_code_name(e.code()), e.what(), config.format);
  }
  return run_command(command, file, config);
}

}  // namespace curvesing

#include <doctest.h>

#include "curvesing/report.hpp"
#include "support.hpp"

using namespace testing;

namespace {

RunConfig json_config() {
  RunConfig c;
  c.format = OutputFormat::kJson;
  return c;
}

}  // namespace

TEST_CASE("germ file with equations") {
  const auto f = parse_germ_file(data_file("three_lines.germ"));
  CHECK(f.vars == kXYZ);
  CHECK_FALSE(f.param);
  CHECK(f.equations.size() == 3);
  CHECK(f.curve().ideal().equals(three_lines().ideal()));
}

TEST_CASE("germ file with a parametrized family") {
  const auto f = parse_germ_file(
      "vars: x,y,z,w\nparam: t\nparametrization: u^4, u^7+t*u^6, u^9, u^10\nsamples: 0, 1/2\n");
  CHECK(f.vars == kXYZW);
  CHECK(f.param == "t");
  CHECK(f.parametrization.size() == 4);
  CHECK(f.samples == std::vector<Rational>{0, Rational(1, 2)});
  const auto fam = f.family();
  CHECK(fam.parametrization == whitney_family().parametrization);
  CHECK(f.parametrization_at_zero()[1] == P("u^7", VarList{"u"}));
}

TEST_CASE("germ file errors") {
  const auto message = [](std::string_view text) {
    try {
      parse_germ_file(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("").find("missing section") != std::string::npos);
  CHECK(message("# only a comment\n").find("missing section") != std::string::npos);
  CHECK(message("vars: x,y\n").find("missing section") != std::string::npos);
  CHECK(message("vars: x,y\nequations:\n  x*q\nend\n") == "line 3: unknown variable 'q' at column 3 in 'x*q'");
  CHECK(message("vars: x,y\nequations:\n  x*y\n").find("line 2") == 0);
  CHECK(message("vars: x,y\nbogus: 1\n").find("line 2") == 0);
  CHECK(message("vars: x,y\nequations\n").find("line 2") == 0);
  CHECK(message("vars: x,y\nparametrization: u, u, u\n").find("line 2") == 0);
  CHECK(message("vars: x,y\nequations:\n  x*t\nend\n").find("unknown variable 't'") != std::string::npos);
  CHECK(message("vars: x,y\nparam: x\nequations:\n  x\nend\n").find("parameter") != std::string::npos);
  CHECK(message("vars: x,y  # ring\nequations:\n  x*y # axes\nend\n") == "no error");
}

TEST_CASE("input digest") {
  CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(input_digest("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(input_digest("vars: x") != input_digest("vars: y"));
}

TEST_CASE("milnor report") {
  const auto r = run_command("milnor", data_file("three_lines.germ"), json_config());
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.body);
  CHECK(j["m"] == 3);
  CHECK(j["e_jac"] == 6);
  CHECK(j["i0"] == 2);
  CHECK(j["mu"] == 2);
  CHECK(j["polar_degree"] == 4);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["smoothability_assumed"] == true);
  CHECK(j["agreement"] == true);
  CHECK(j["trials"].size() == 2);
  CHECK(j["input_digest"] == input_digest(data_file("three_lines.germ")));
  CHECK_FALSE(j.contains("timings_ms"));
  CHECK_FALSE(j.contains("error"));
}

TEST_CASE("JSON round trip keeps integers exact") {
  for (const auto& name : {"three_lines.germ", "c345.germ", "cusp.germ", "line.germ"}) {
    const auto r = run_command("invariants", data_file(name), json_config());
    REQUIRE(r.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(r.body);
    CHECK(parsed == r.report);
    for (const auto& key : {"m", "e_jac", "i0", "mu", "polar_degree", "jacobian_minor_count"}) {
      CHECK(parsed[key].is_number_integer());
      CHECK(parsed[key] == r.report[key]);
    }
  }
}

TEST_CASE("reports are deterministic") {
  for (const auto& command : {"milnor", "family", "oracle", "colength"}) {
    const char* file = std::string_view(command) == "family" ? "three_lines_smoothing.germ" : "c345.germ";
    const auto a = run_command(command, data_file(file), json_config());
    const auto b = run_command(command, data_file(file), json_config());
    CHECK(a.exit_code == 0);
    CHECK(a.body == b.body);
  }
}

TEST_CASE("other commands") {
  const auto oracle = run_command("oracle", data_file("c345.germ"), json_config());
  CHECK(oracle.report["delta"] == 2);
  CHECK(oracle.report["mu"] == 4);
  CHECK(oracle.report["gaps"] == nlohmann::json::array({1, 2}));

  const auto colength = run_command("colength", data_file("three_lines.germ"), json_config());
  CHECK(colength.report["local"] == "infinite");
  const auto point = run_command("colength", "vars: x,y\nequations:\n  x^2\n  y^3 - y\nend\n", json_config());
  CHECK(point.report["local"] == 2);
  CHECK(point.report["global"] == 6);

  const auto family = run_command("family", data_file("three_lines_smoothing.germ"), json_config());
  REQUIRE(family.exit_code == 0);
  CHECK(family.report["samples"].size() == 2);
  CHECK(family.report["samples"][0]["global_number"] == 2);
  CHECK(family.report["constant"] == true);

  const auto whitney = run_command("whitney", data_file("cusp_to_node.germ"), json_config());
  CHECK(whitney.report["verdict"] == "NOT CONSTANT");
}

TEST_CASE("configuration overrides") {
  RunConfig c = json_config();
  c.samples = std::vector<Rational>{3};
  const auto family = run_command("family", data_file("three_lines_smoothing.germ"), c);
  REQUIRE(family.report["samples"].size() == 1);
  CHECK(family.report["samples"][0]["t"] == "3");

  c = json_config();
  c.ci_matrix = kRowDeletion;
  const auto m = run_command("milnor", data_file("c345.germ"), c);
  CHECK(m.report["e_reduction"] == 9);
  CHECK(m.report["i0"] == 3);
  CHECK(m.report["mu"] == 4);

  c = json_config();
  c.timings = true;
  CHECK(run_command("milnor", data_file("cusp.germ"), c).report.contains("timings_ms"));
}

TEST_CASE("error reports and exit codes") {
  const auto check = [](const RunResult& r, int code, const char* name) {
    CHECK(r.exit_code == code);
    REQUIRE(r.report.contains("error"));
    CHECK(r.report["error"]["code"] == name);
  };
  check(run_command("milnor", "", json_config()), 2, "parse");
  check(run_command("nonsense", data_file("cusp.germ"), json_config()), 2, "invalid_argument");
  check(run_command("milnor", "vars: x,y\nequations:\n  x^2 + y^2 + 1\nend\n", json_config()), 3, "degenerate");
  check(run_command("oracle", "vars: x,y\nparametrization: u^2, u^4\n", json_config()), 3, "degenerate");
  RunConfig degenerate = json_config();
  degenerate.ci_matrix = ConstMatrix::parse("1,0,0;2,0,0");
  check(run_command("milnor", data_file("c345.germ"), degenerate), 4, "genericity");
  RunConfig tiny = json_config();
  tiny.step_budget = 5;
  check(run_command("milnor", data_file("c345.germ"), tiny), 5, "step_budget");
  RunConfig one = json_config();
  one.trials = 1;
  check(run_command("milnor", data_file("cusp.germ"), one), 2, "invalid_argument");
}

TEST_CASE("text output") {
  const auto r = run_command("milnor", data_file("three_lines.germ"), RunConfig{});
  CHECK(r.body.find("mu: 2\n") != std::string::npos);
  CHECK(r.body.find("  - seed=0 m=3 e_jac=6 i0=2\n") != std::string::npos);
}

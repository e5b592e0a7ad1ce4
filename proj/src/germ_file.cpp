#include "curvesing/germ_file.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "curvesing/error.hpp"

namespace curvesing {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in{std::string(s)};
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool valid_name(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

const VarList kParamVar{"u"};

}  // namespace

GermFile parse_germ_file(std::string_view text) {
  GermFile f;
  f.source = std::string(text);
  bool have_vars = false;
  bool in_equations = false;
  bool have_equations = false;
  std::size_t equations_start = 0;
  std::vector<std::pair<std::size_t, std::string>> equation_lines;
  std::pair<std::size_t, std::string> parametrization_line{0, ""};

  std::stringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (in_equations) {
      if (line == "end") {
        in_equations = false;
      } else {
        equation_lines.emplace_back(line_no, line);
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(line_no, "expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "vars") {
      if (have_vars) fail(line_no, "duplicate section 'vars'");
      f.vars = split_list(value);
      for (const auto& v : f.vars) {
        if (!valid_name(v)) fail(line_no, "invalid variable name '" + v + "'");
      }
      if (f.vars.empty()) fail(line_no, "empty variable list");
      have_vars = true;
    } else if (key == "param") {
      if (f.param) fail(line_no, "duplicate section 'param'");
      if (!valid_name(value)) fail(line_no, "invalid parameter name '" + value + "'");
      f.param = value;
    } else if (key == "equations") {
      if (have_equations) fail(line_no, "duplicate section 'equations'");
      if (!value.empty()) fail(line_no, "equations go on the following lines, terminated by 'end'");
      in_equations = true;
      have_equations = true;
      equations_start = line_no;
    } else if (key == "parametrization") {
      if (parametrization_line.first != 0) fail(line_no, "duplicate section 'parametrization'");
      parametrization_line = {line_no, value};
    } else if (key == "samples") {
      for (const auto& s : split_list(value)) {
        try {
          f.samples.push_back(parse_rational(s));
        } catch (const Error& e) {
          fail(line_no, e.what());
        }
      }
    } else {
      fail(line_no, "unknown section '" + key + "'");
    }
  }
  if (in_equations) fail(equations_start, "equations section is not terminated by 'end'");
  if (!have_vars) throw ParseError("missing section 'vars'");
  if (equation_lines.empty() && parametrization_line.first == 0) {
    throw ParseError("missing section 'equations' or 'parametrization'");
  }
  if (f.param && std::find(f.vars.begin(), f.vars.end(), *f.param) != f.vars.end()) {
    throw ParseError("parameter '" + *f.param + "' is also listed among the variables");
  }

  VarList full = f.vars;
  if (f.param) full.push_back(*f.param);
  for (const auto& [ln, eq] : equation_lines) {
    try {
      parse_poly(eq, full);
    } catch (const Error& e) {
      fail(ln, e.what());
    }
    f.equations.push_back(eq);
  }
  if (parametrization_line.first != 0) {
    VarList pvars = kParamVar;
    if (f.param) pvars.push_back(*f.param);
    for (const auto& entry : split_list(parametrization_line.second)) {
      try {
        parse_poly(entry, pvars);
      } catch (const Error& e) {
        fail(parametrization_line.first, e.what());
      }
      f.parametrization.push_back(entry);
    }
    if (f.parametrization.size() != f.vars.size()) {
      fail(parametrization_line.first, "parametrization has " + std::to_string(f.parametrization.size()) +
                                           " entries for " + std::to_string(f.vars.size()) + " variables");
    }
  }
  return f;
}

FamilyGerm GermFile::family() const {
  FamilyGerm fam;
  fam.ring = vars;
  fam.param = param.value_or("t");
  VarList full = vars;
  full.push_back(fam.param);
  for (const auto& eq : equations) fam.equations.push_back(parse_poly(eq, full));
  const VarList pvars{kParamVar.front(), fam.param};
  for (const auto& entry : parametrization) fam.parametrization.push_back(parse_poly(entry, pvars));
  return fam;
}

CurveGerm GermFile::curve(const EngineOptions& opts) const { return family().fiber(0, opts); }

Ideal GermFile::ideal(const EngineOptions& opts) const {
  if (equations.empty()) return curve(opts).ideal();
  const FamilyGerm fam = family();
  return specialize(Ideal(fam.full_ring(), fam.equations), fam.param, 0);
}

std::vector<Poly> GermFile::parametrization_at_zero() const {
  const FamilyGerm fam = family();
  std::vector<Poly> out;
  const std::vector<int> keep_u{0, -1};
  for (const auto& p : fam.parametrization) out.push_back(p.substitute(1, 0).remap(1, keep_u));
  return out;
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace curvesing

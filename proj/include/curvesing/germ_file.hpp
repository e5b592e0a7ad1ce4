#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvesing/invariants.hpp"

namespace curvesing {

// Line-oriented germ description:
//
//   vars: x,y,z
//   param: t                      (optional)
//   equations:                    (one polynomial per line up to 'end')
//     x*y
//   end
//   parametrization: u^3, u^4, u^5
//   samples: 0, 1, 2
//
// '#' starts a comment. Polynomials are checked against the declared
// variables while parsing.
struct GermFile {
  VarList vars;
  std::optional<std::string> param;
  std::vector<std::string> equations;
  std::vector<std::string> parametrization;
  std::vector<Rational> samples;
  std::string source;

  // Central fiber (parameter set to 0).
  CurveGerm curve(const EngineOptions& opts = {}) const;
  // Ideal of the equations at the central fiber, without curve validation.
  Ideal ideal(const EngineOptions& opts = {}) const;
  FamilyGerm family() const;
  // Parametrization entries at parameter 0, univariate in u.
  std::vector<Poly> parametrization_at_zero() const;
};

GermFile parse_germ_file(std::string_view text);

// FNV-1a 64 of the file text, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view text);

}  // namespace curvesing

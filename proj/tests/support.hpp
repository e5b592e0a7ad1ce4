#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvesing/error.hpp"
#include "curvesing/ideal.hpp"
#include "curvesing/invariants.hpp"

namespace testing {

using namespace curvesing;

inline const VarList kXY{"x", "y"};
inline const VarList kXYZ{"x", "y", "z"};
inline const VarList kXYZW{"x", "y", "z", "w"};

inline Poly P(const std::string& text, const VarList& ring = kXYZ) { return parse_poly(text, ring); }

inline std::vector<Poly> polys(const std::vector<std::string>& texts, const VarList& ring = kXYZ) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

inline Ideal I(const std::vector<std::string>& texts, const VarList& ring = kXYZ) {
  return Ideal(ring, polys(texts, ring));
}

inline const nlohmann::json& reference() {
  static const nlohmann::json j = [] {
    std::ifstream in(CSG_REFERENCE_JSON);
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline std::string data_file(const std::string& name) {
  std::ifstream in(std::string(CSG_DATA_DIR) + "/" + name);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

inline CurveGerm three_lines() { return CurveGerm(kXYZ, polys({"x*y", "y*z", "x*z"})); }
inline CurveGerm c345() { return CurveGerm(kXYZ, polys({"x^2*y - z^2", "x^3 - y*z", "y^2 - x*z"})); }
inline CurveGerm cusp() { return CurveGerm(kXY, polys({"y^2 - x^3"}, kXY)); }
inline CurveGerm node() { return CurveGerm(kXY, polys({"y^2 - x^3 - x^2"}, kXY)); }
inline CurveGerm line() { return CurveGerm(kXY, polys({"y"}, kXY)); }

inline FamilyGerm whitney_family() {
  const VarList ut{"u", "t"};
  return FamilyGerm{kXYZW, "t", {}, polys({"u^4", "u^7 + t*u^6", "u^9", "u^10"}, ut)};
}

inline const ConstMatrix kSumA = ConstMatrix::parse("1,1,0;1,0,1");
inline const ConstMatrix kRowDeletion = ConstMatrix::parse("1,0,0;0,0,1");
inline const ConstMatrix kFirstTwo = ConstMatrix::parse("1,0,0;0,1,0");

}  // namespace testing

namespace testing {

struct CorpusIdeal {
  std::string name;
  Ideal ideal;
};

// Zero-dimensional at the origin (finite local colength), small enough for
// the Macaulay-matrix oracle.
inline std::vector<CorpusIdeal> colength_corpus() {
  return {
      {"maximal ideal", I({"x", "y", "z"})},
      {"m squared", I({"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"})},
      {"three lines quadric", I({"x*y", "y*z", "x*z", "x^2 + y^2 + z^2"})},
      {"three lines link", I({"x*y", "y*z", "x*z", "x - y", "y + z"})},
      {"three lines hyperplane", I({"x*y", "y*z", "x*z", "x + 2*y - 3*z"})},
      {"c345 link", I({"x^2*y - z^2", "x^3 - y*z", "y^2 - x*z", "x + y + z", "y + z + x^2"})},
      {"c345 row deletion link", I({"x^2*y - z^2", "x^3 - y*z", "y^2 - x*z", "y", "z"})},
      {"c345 hyperplane", I({"x^2*y - z^2", "x^3 - y*z", "y^2 - x*z", "x + 2*y - 3*z"})},
      {"c345 polar",
       I({"x^2*y - z^2", "x^3 - y*z", "y^2 - x*z",
          "2*y^2 + x*z + 3*y*z + z^2 - 4*x^3 - 7*x^2*y - 2*x*y^2 - 7*x^2*z - 2*x*y*z - 3*x^4"})},
      {"cusp hyperplane", I({"y^2 - x^3", "x + 3*y"}, kXY)},
      {"cusp polar", I({"y^2 - x^3", "-9*x^2 + 10*y"}, kXY)},
      {"cusp jacobian", I({"-3*x^2", "2*y"}, kXY)},
      {"node polar", I({"y^2 - x^3 - x^2", "3*(-3*x^2 - 2*x) + 10*y"}, kXY)},
      {"node jacobian", I({"-3*x^2 - 2*x", "2*y"}, kXY)},
      {"line hyperplane", I({"y", "x + y"}, kXY)},
      {"distant points", I({"z", "y^2", "x^2 - 1"})},
      {"monomial box", I({"x^2", "y^3", "z^2"})},
      {"monomial staircase", I({"x^3", "x*y", "y^4", "z"})},
      {"unit multiple", I({"x + x^2", "y - y^3 + x*y"}, kXY)},
      {"A2 ideal", I({"x^2 + y^3", "x*y"}, kXY)},
      {"E6 jacobian", I({"3*x^2", "4*y^3"}, kXY)},
      {"mixed", I({"x^2 - y*z", "y^2 - x*z", "z^2 - x*y + x^3"})},
      {"nonreduced point", I({"x^2", "y^2 + x*z", "z^3"})},
  };
}

}  // namespace testing

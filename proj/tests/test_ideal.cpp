#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

bool same(const Ideal& a, const Ideal& b) { return a.equals(b); }

}  // namespace

TEST_CASE("quotient") {
  CHECK(same(quotient(I({"x*y"}), I({"x"})), I({"y"})));
  CHECK(quotient(I({"0"}), I({"x"})).is_zero());
  CHECK(same(quotient(I({"x*y + y*z", "x*y + x*z"}), I({"x*y", "y*z", "x*z"})), I({"x - y", "y + z"})));
  CHECK(same(quotient(I({"x^2", "y"}), I({"1"})), I({"x^2", "y"})));
}

TEST_CASE("saturation") {
  CHECK(same(saturate(I({"x^2*y"}), I({"y"})).ideal, I({"x^2"})));
  const Saturation link = saturate(I({"x*y + y*z", "x*y + x*z"}), I({"x*y", "y*z", "x*z"}));
  CHECK(same(link.ideal, I({"x - y", "y + z"})));
  CHECK(link.growth_steps == 1);
  CHECK(link.single_quotient_sufficed());
  const Ideal once_more = quotient(link.ideal, I({"x*y", "y*z", "x*z"}));
  CHECK(same(once_more, link.ideal));
  const Ideal i = I({"x^2*y", "x*z^3"});
  CHECK(same(saturate(i, I({"1"})).ideal, i));
  CHECK(same(saturate_by_element(I({"x^2*y"}), P("y")), I({"x^2"})));
}

TEST_CASE("elimination and implicitization") {
  const VarList xyu{"x", "y", "u"};
  const VarList drop_u{"u"};
  CHECK(eliminate(I({"u - x"}, xyu), drop_u).is_zero());
  const auto from_oracle = [](const char* key) {
    std::vector<std::string> gens;
    for (const auto& s : reference()[key]) gens.push_back(s.get<std::string>());
    return I(gens, kXY);
  };
  CHECK(same(eliminate(I({"x - u^2", "y - u^3"}, xyu), drop_u), from_oracle("eliminate_cusp")));
  const VarList xyt{"x", "y", "t"};
  const VarList drop_t{"t"};
  CHECK(same(eliminate(I({"x - t*y", "t^2 - 1"}, xyt), drop_t), from_oracle("eliminate_resultant")));

  const VarList u{"u"};
  CHECK(same(implicitize(polys({"u^2", "u^3"}, u), kXY), from_oracle("implicitize_u2_u3")));
  CHECK(same(implicitize(polys({"u^3", "u^4", "u^5"}, u), kXYZ), c345().ideal()));
  CHECK(same(implicitize(polys({"u", "u"}, u), kXY), I({"x - y"}, kXY)));
}

TEST_CASE("implicitization vanishes on the parametrization") {
  const VarList u{"u"};
  for (const auto& param : std::vector<std::vector<std::string>>{
           {"u^3", "u^4", "u^5"}, {"u^2", "u^3 + u^4"}, {"u^4", "u^6 + u^7", "u^9"}}) {
    const VarList ring = param.size() == 2 ? kXY : kXYZ;
    const auto phi = polys(param, u);
    const Ideal result = implicitize(phi, ring);
    for (const auto& g : result.gens()) {
      Poly image = Poly::constant(1, 0);
      for (const auto& t : g.terms()) {
        Poly term = Poly::constant(1, t.coef);
        for (std::size_t v = 0; v < ring.size(); ++v) term = term * phi[v].pow(t.mono[v]);
        image += term;
      }
      CHECK(image.is_zero());
    }
  }
}

TEST_CASE("specialization") {
  const VarList xyt{"x", "y", "t"};
  const Ideal family = I({"x*y + t*x + t^2"}, xyt);
  CHECK(specialize(family, "t", 0).gens() == polys({"x*y"}, kXY));
  CHECK(specialize(family, "t", 1).gens() == polys({"x*y + x + 1"}, kXY));
  CHECK(specialize(I({"x*y", "x - y"}, xyt), "t", 5).gens() == polys({"x*y", "x - y"}, kXY));
}

TEST_CASE("colength") {
  const Ideal lines_link = sum(three_lines().ideal(), I({"x - y", "y + z"}));
  CHECK(colength(lines_link, ColengthMode::kAtOrigin) == 2u);
  const Ideal c345_link = sum(c345().ideal(), I({"x + y + z", "y + z + x^2"}));
  CHECK(colength(c345_link, ColengthMode::kAtOrigin) == 2u);
  CHECK(colength(I({"z", "y^2", "x^2 - 1"}), ColengthMode::kGlobal) ==
        reference()["global_z_y2_x2m1"].get<std::uint64_t>());
  CHECK(colength(I({"z", "y^2", "x^2 - 1"}), ColengthMode::kAtOrigin) == 0u);
  CHECK_FALSE(colength(three_lines().ideal(), ColengthMode::kAtOrigin).has_value());
}

TEST_CASE("origin colength agrees with the local basis") {
  for (const auto& entry : colength_corpus()) {
    CAPTURE(entry.name);
    CHECK(origin_colength(entry.ideal) == colength(entry.ideal, ColengthMode::kAtOrigin));
  }
}

TEST_CASE("ideal properties on the corpus") {
  const std::vector<std::pair<Ideal, Ideal>> pairs{
      {I({"x*y + y*z", "x*y + x*z"}), three_lines().ideal()},
      {I({"x^2*y - z^2 + x^3 - y*z", "x^2*y - z^2 + y^2 - x*z"}), c345().ideal()},
      {I({"x^2*y", "x*y^2"}), I({"x", "y"})},
      {I({"x^3", "x*y*z"}), I({"x*z"})},
  };
  for (const auto& [i, j] : pairs) {
    CHECK(i.subset_of(quotient(i, j)));
    const Ideal s = saturate(i, j).ideal;
    CHECK(same(saturate(s, j).ideal, s));
  }
  for (const auto& entry : colength_corpus()) {
    CAPTURE(entry.name);
    const Colength global = colength(entry.ideal, ColengthMode::kGlobal);
    const Colength local = colength(entry.ideal, ColengthMode::kAtOrigin);
    REQUIRE(local.has_value());
    if (global) CHECK(*global >= *local);
  }
}

TEST_CASE("local dimension") {
  CHECK(local_dimension(three_lines().ideal()) == 1);
  CHECK(local_dimension(I({"x", "y", "z"})) == 0);
  CHECK(local_dimension(I({"x - 1"})) == -1);
  CHECK(local_dimension(I({"x*y"})) == 2);
}

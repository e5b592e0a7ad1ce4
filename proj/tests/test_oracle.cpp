#include <doctest.h>

#include "curvesing/oracle.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("semigroup delta matches enumeration") {
  for (const auto& [key, gens] : std::vector<std::pair<std::string, std::vector<std::uint64_t>>>{
           {"2,3", {2, 3}}, {"3,4,5", {3, 4, 5}}, {"4,7,9,10", {4, 7, 9, 10}}}) {
    const auto& want = reference()["semigroup_" + key];
    const auto got = semigroup_delta(gens);
    CHECK(got.delta == want["delta"].get<std::uint64_t>());
    CHECK(got.gaps == want["gaps"].get<std::vector<std::uint64_t>>());
  }
}

TEST_CASE("semigroup delta edge cases") {
  const std::vector<std::uint64_t> one{1};
  CHECK(semigroup_delta(one).delta == 0);
  const std::vector<std::uint64_t> even{4, 6};
  CHECK_THROWS_AS(semigroup_delta(even), DegenerateInput);
  const std::vector<std::uint64_t> small{3, 5};
  const std::vector<std::uint64_t> more{3, 5, 7};
  CHECK(semigroup_delta(more).delta <= semigroup_delta(small).delta);
}

TEST_CASE("milnor from delta") {
  CHECK(milnor_from_delta(5, 1) == 10);
  CHECK(milnor_from_delta(2, 3) == 2);
  CHECK(milnor_from_delta(0, 1) == 0);
  CHECK_THROWS_AS(milnor_from_delta(1, 0), InvalidArgument);
}

TEST_CASE("truncated colength") {
  const auto m = truncated_colength(I({"x", "y", "z"}), 3);
  CHECK(m.value == 1);
  CHECK(m.stable);
  const auto quadric = truncated_colength(I({"x*y", "y*z", "x*z", "x^2 + y^2 + z^2"}), 6);
  CHECK(quadric.value == reference()["local_three_lines_quadric"].get<std::uint64_t>());
  CHECK(quadric.stable);
  CHECK_FALSE(truncated_colength(I({"x*y", "y*z", "x*z"}), 6).stable);
  CHECK_THROWS_AS(truncated_colength(I({"x"}), 0), InvalidArgument);
}

TEST_CASE("stabilized colength ignores distant points") {
  CHECK(stabilized_colength(I({"z", "y^2", "x^2 - 1"}), 8) == 0u);
  CHECK(stabilized_colength(I({"x^2*y - z^2", "x^3 - y*z", "y^2 - x*z", "y", "z"}), 10) ==
        reference()["local_345_plus_yz"].get<std::uint64_t>());
  CHECK_FALSE(stabilized_colength(I({"x*y"}), 6).has_value());
}

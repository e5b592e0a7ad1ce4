#pragma once

#include <cstdint>
#include <vector>

#include "curvesing/ideal.hpp"

namespace curvesing {

struct SemigroupDelta {
  std::uint64_t delta = 0;
  std::vector<std::uint64_t> gaps;  // ascending
};

// Gaps of the numerical semigroup generated by `generators`. Throws
// DegenerateInput when the generators have gcd != 1.
SemigroupDelta semigroup_delta(std::span<const std::uint64_t> generators);

// 2 delta - r + 1
std::int64_t milnor_from_delta(std::uint64_t delta, std::uint64_t branches);

struct TruncatedColength {
  std::uint64_t value = 0;
  // Value unchanged from the previous cap, so it equals the local colength.
  bool stable = false;
};

// dim Q[x] / (I + m^D) by row reduction of the Macaulay matrix: multiples of
// the generators by monomials, truncated below degree D, over the monomials
// of degree < D.
TruncatedColength truncated_colength(const Ideal& i, unsigned cap);

// Raises the cap from 1 until the value stabilizes; nullopt when it does not
// by `max_cap`.
Colength stabilized_colength(const Ideal& i, unsigned max_cap);

}  // namespace curvesing

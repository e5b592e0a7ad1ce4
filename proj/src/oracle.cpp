#include "curvesing/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "curvesing/error.hpp"

namespace curvesing {

SemigroupDelta semigroup_delta(std::span<const std::uint64_t> generators) {
  if (generators.empty()) throw InvalidArgument("empty semigroup generator list");
  std::uint64_t g = 0;
  std::uint64_t largest = 0;
  for (const auto a : generators) {
    if (a == 0) throw InvalidArgument("semigroup generators must be positive");
    g = std::gcd(g, a);
    largest = std::max(largest, a);
  }
  if (g != 1) throw DegenerateInput("semigroup generators have gcd " + std::to_string(g));

  SemigroupDelta out;
  std::vector<bool> member{true};
  std::uint64_t run = 0;
  for (std::uint64_t k = 1; run < largest; ++k) {
    bool hit = false;
    for (const auto a : generators) {
      if (a <= k && member[k - a]) {
        hit = true;
        break;
      }
    }
    member.push_back(hit);
    if (hit) {
      ++run;
    } else {
      run = 0;
      out.gaps.push_back(k);
    }
  }
  out.delta = out.gaps.size();
  return out;
}

std::int64_t milnor_from_delta(std::uint64_t delta, std::uint64_t branches) {
  if (branches == 0) throw InvalidArgument("branch count must be positive");
  return 2 * static_cast<std::int64_t>(delta) - static_cast<std::int64_t>(branches) + 1;
}

namespace {

using SparseRow = std::map<std::size_t, Integer>;

void make_primitive(SparseRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// Row echelon form kept as pivot column -> row with that leading column.
class Echelon {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      const auto lead = row.begin()->first;
      const auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        make_primitive(row);
        pivots_.emplace(lead, std::move(row));
        return;
      }
      // row <- p * row - r * pivot, with p, r the leading entries.
      const Integer p = it->second.begin()->second;
      const Integer r = row.begin()->second;
      for (auto& [c, v] : row) v *= p;
      for (const auto& [c, v] : it->second) {
        auto& slot = row[c];
        slot -= r * v;
        if (slot == 0) row.erase(c);
      }
      make_primitive(row);
    }
  }
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

std::vector<Monomial> monomials_below(std::size_t nvars, unsigned cap) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d < cap; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::uint64_t truncated_value(const Ideal& ideal, unsigned cap) {
  const std::size_t n = ideal.nvars();
  const auto cols = monomials_below(n, cap);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], k);

  Echelon echelon;
  for (const auto& g : ideal.gens()) {
    if (g.is_zero() || g.order() >= cap) continue;
    Integer denom = 1;
    for (const auto& t : g.terms()) {
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    for (const auto& shift : cols) {
      if (shift.degree() + g.order() >= cap) continue;
      SparseRow row;
      for (const auto& t : g.terms()) {
        const Monomial m = shift * t.mono;
        if (m.degree() >= cap) continue;
        const Rational scaled = t.coef * denom;
        row.emplace(index.at(m), scaled.get_num());
      }
      echelon.insert(std::move(row));
    }
  }
  return cols.size() - echelon.rank();
}

}  // namespace

TruncatedColength truncated_colength(const Ideal& i, unsigned cap) {
  if (cap == 0) throw InvalidArgument("degree cap must be positive");
  TruncatedColength out;
  out.value = truncated_value(i, cap);
  out.stable = cap > 1 && truncated_value(i, cap - 1) == out.value;
  return out;
}

Colength stabilized_colength(const Ideal& i, unsigned max_cap) {
  std::uint64_t previous = truncated_value(i, 1);
  for (unsigned cap = 2; cap <= max_cap; ++cap) {
    const std::uint64_t value = truncated_value(i, cap);
    if (value == previous) return value;
    previous = value;
  }
  return std::nullopt;
}

}  // namespace curvesing

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "curvesing/monomial.hpp"
#include "curvesing/poly.hpp"

namespace curvesing {

struct EngineOptions {
  // Reduction steps allowed per basis computation; exceeding it throws
  // StepBudgetExceeded.
  std::uint64_t step_budget = 1'000'000;
  // Local degree orders: once the leading ideal has a finite staircase,
  // discard terms of degree above the highest corner.
  bool highest_corner = true;
  // Gebauer-Moeller pair criteria. Off only for cross-checking.
  bool pair_criteria = true;
};

// A Groebner basis (global order) or standard basis (local order).
class Basis {
 public:
  Basis(std::size_t nvars, MonomialOrder order, std::vector<Poly> generators, bool reduced,
        unsigned corner_degree);

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  bool reduced() const noexcept { return reduced_; }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_unit_ideal() const noexcept;
  // For local bases: every monomial of this degree or higher lies in the
  // ideal. Zero when no such bound was found.
  unsigned corner_degree() const noexcept { return corner_; }

  std::vector<Monomial> leading_monomials() const;
  // Dimension of the quotient as read off the leading ideal; -1 for the unit ideal.
  int dimension() const;

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Poly> gens_;
  bool reduced_;
  unsigned corner_;
};

// Buchberger with sugar selection; returns the reduced Groebner basis.
// `gens` must be nonempty (the zero ideal is {0}).
Basis groebner_basis(std::span<const Poly> gens, const MonomialOrder& order,
                     const EngineOptions& opts = {});

// Standard basis for a local order via Mora's normal form.
Basis standard_basis(std::span<const Poly> gens, const MonomialOrder& order,
                     const EngineOptions& opts = {});

// Dispatches on the order type.
Basis compute_basis(std::span<const Poly> gens, const MonomialOrder& order,
                    const EngineOptions& opts = {});

// Global bases: the unique fully reduced remainder. Local bases: a remainder
// whose leading monomial is standard, fully reduced when the basis has a
// corner degree. Zero iff p lies in the (localized) ideal.
Poly normal_form(const Poly& p, const Basis& b, const EngineOptions& opts = {});

// Number of standard monomials; nullopt means infinite.
using Colength = std::optional<std::uint64_t>;
Colength staircase_count(const Basis& b);

// The standard monomials by increasing degree; requires a finite staircase.
std::vector<Monomial> standard_monomials(const Basis& b);

}  // namespace curvesing

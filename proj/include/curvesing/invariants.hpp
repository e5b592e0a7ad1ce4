#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/ideal.hpp"
#include "curvesing/matrix.hpp"

namespace curvesing {

// Curve germ at the origin of C^n given by equations, or by a
// parametrization in u that is implicitized on construction.
class CurveGerm {
 public:
  CurveGerm(VarList ring, std::vector<Poly> equations);
  static CurveGerm from_parametrization(VarList ring, std::span<const Poly> parametrization,
                                        const EngineOptions& opts = {});

  const VarList& ring() const noexcept { return ideal_.ring(); }
  std::size_t nvars() const noexcept { return ideal_.nvars(); }
  const std::vector<Poly>& equations() const noexcept { return ideal_.gens(); }
  const Ideal& ideal() const noexcept { return ideal_; }

 private:
  explicit CurveGerm(Ideal ideal);
  void validate() const;

  Ideal ideal_;
};

// Equations (or a parametrization) involving one deformation parameter.
struct FamilyGerm {
  VarList ring;  // without the parameter
  std::string param;
  // Live in ring + param, parameter last.
  std::vector<Poly> equations;
  // Univariate in u, with the parameter as a second variable.
  std::vector<Poly> parametrization;

  VarList full_ring() const;
  CurveGerm fiber(const Rational& t, const EngineOptions& opts = {}) const;
};

struct ModulePresentation {
  PolyMatrix matrix;  // p x c
  std::size_t generic_rank = 0;
};

struct InvariantConfig {
  std::uint64_t seed = 0;
  unsigned trials = 2;
  unsigned max_retries = 5;
  unsigned bound = 32;
  EngineOptions engine;
  // Replaces the random matrix defining the complete intersection Z.
  std::optional<ConstMatrix> ci_matrix;
};

struct Trial {
  std::uint64_t seed = 0;
  std::uint64_t m = 0;
  std::uint64_t e_jac = 0;
  std::uint64_t i0 = 0;
  friend bool operator==(const Trial& a, const Trial& b) {
    return a.m == b.m && a.e_jac == b.e_jac && a.i0 == b.i0;
  }
};

struct Link {
  Ideal z;
  ConstMatrix a;
  Ideal w;
  bool single_quotient_sufficed = true;
};

struct InvariantReport {
  std::uint64_t m = 0;
  std::uint64_t e_jac = 0;
  std::uint64_t i0 = 0;
  std::int64_t mu = 0;
  std::int64_t polar_degree = 0;
  std::vector<std::string> w0_generators;
  std::string ci_matrix;
  bool single_quotient_sufficed = true;
  // Set when Z came from a user matrix: multiplicity of the corresponding
  // reduction of the Jacobian module, which replaces e_jac in the formula.
  std::optional<std::uint64_t> e_reduction;
  std::vector<Trial> trials;
  bool agreement = true;
};

// Linear combination with nonzero integer coefficients drawn from `seed`.
Poly random_combination(std::span<const Poly> polys, std::uint64_t seed, unsigned bound);

std::uint64_t multiplicity(const CurveGerm& x, const InvariantConfig& config);
Ideal jacobian_ideal(const CurveGerm& x);
std::uint64_t hs_mult_jacobian(const CurveGerm& x, const InvariantConfig& config);

// Z = V(A f) with A of size (n-1) x p. The matrix comes from the config when
// given, else it is drawn and redrawn until Z is a curve at the origin.
std::pair<Ideal, ConstMatrix> generic_ci(const CurveGerm& x, const InvariantConfig& config);
Link residual_link(const Ideal& z, const ConstMatrix& a, const CurveGerm& x,
                   const EngineOptions& opts = {});
// Local colength of I_X + I_W; GenericityFailure when infinite.
std::uint64_t ci_discrepancy(const CurveGerm& x, const Ideal& w, const EngineOptions& opts = {});

InvariantReport milnor_number(const CurveGerm& x, const InvariantConfig& config);

// Colength at the origin of I_X + det(A [M] B).
std::uint64_t br_multiplicity(const ModulePresentation& p, const ConstMatrix& a, const ConstMatrix& b,
                              const CurveGerm& ambient, const EngineOptions& opts = {});
// [M] = Jacobian matrix of the germ, generic rank n - 1.
ModulePresentation jacobian_presentation(const CurveGerm& x);

struct ProfileRow {
  Rational t;
  std::uint64_t global_number = 0;
  std::uint64_t points = 0;
  bool transversal = false;
  std::uint64_t link_growth_steps = 0;
};

struct FamilyProfile {
  ConstMatrix a;
  std::vector<ProfileRow> rows;
  bool constant = true;
};

FamilyProfile family_profile(const FamilyGerm& f, std::span<const Rational> samples,
                             const InvariantConfig& config);

struct WhitneyRow {
  Rational t;
  std::uint64_t e_jac = 0;
  std::uint64_t i0 = 0;
  std::int64_t difference = 0;
};

struct WhitneyVerdict {
  std::vector<WhitneyRow> rows;
  bool constant = true;
};

WhitneyVerdict whitney_check(const FamilyGerm& f, std::span<const Rational> samples,
                             const InvariantConfig& config);

// Number of distinct points of V(I) over C for a zero-dimensional ideal.
std::uint64_t count_points(const Ideal& i, std::uint64_t seed, const EngineOptions& opts = {});

}  // namespace curvesing

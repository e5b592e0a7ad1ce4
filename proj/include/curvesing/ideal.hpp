#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "curvesing/basis.hpp"
#include "curvesing/poly.hpp"

namespace curvesing {

// Ideal of Q[ring]. Bases are computed on demand and cached per order; the
// cache is shared between copies, which all denote the same ideal.
class Ideal {
 public:
  Ideal(VarList ring, std::vector<Poly> gens);

  static Ideal unit(VarList ring);
  static Ideal zero(VarList ring);
  static Ideal parse(VarList ring, std::span<const std::string> gens);

  const VarList& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.size(); }
  const std::vector<Poly>& gens() const noexcept { return gens_; }

  const Basis& basis(const MonomialOrder& order, const EngineOptions& opts = {}) const;
  const Basis& groebner(const EngineOptions& opts = {}) const {
    return basis(MonomialOrder::degrevlex(), opts);
  }
  const Basis& local_basis(const EngineOptions& opts = {}) const {
    return basis(MonomialOrder::negdegrevlex(), opts);
  }

  bool is_zero() const;
  bool is_unit(const EngineOptions& opts = {}) const;
  bool contains(const Poly& p, const EngineOptions& opts = {}) const;
  // Membership in the localization at the origin.
  bool contains_locally(const Poly& p, const EngineOptions& opts = {}) const;
  bool subset_of(const Ideal& other, const EngineOptions& opts = {}) const;
  // Equality as ideals of Q[ring] (reduced Groebner bases agree).
  bool equals(const Ideal& other, const EngineOptions& opts = {}) const;

  std::vector<std::string> gen_strings() const;
  // Generators of the reduced degrevlex basis, in canonical text form.
  std::vector<std::string> canonical_strings(const EngineOptions& opts = {}) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const Basis>>> entries;
  };

  VarList ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b, const EngineOptions& opts = {});

// (I : J) = { f : f J in I }, as the intersection of (I : g) over generators
// g of J, each obtained from I cap (g) by exact division.
Ideal quotient(const Ideal& i, const Ideal& j, const EngineOptions& opts = {});

struct Saturation {
  Ideal ideal;
  // Number of quotient steps that strictly enlarged the ideal.
  unsigned growth_steps = 0;
  bool single_quotient_sufficed() const noexcept { return growth_steps <= 1; }
};

// (I : g^inf) as the elimination of s from I + (1 - s g).
Ideal saturate_by_element(const Ideal& i, const Poly& g, const EngineOptions& opts = {});

// (I : J^inf) by iterating quotients until the reduced bases stabilize. A
// step whose result satisfies I : g^inf = I for a generator g of J ends the
// iteration early, since then I : J = I.
Saturation saturate(const Ideal& i, const Ideal& j, const EngineOptions& opts = {});

// I cap Q[ring \ drop]
Ideal eliminate(const Ideal& i, std::span<const std::string> drop, const EngineOptions& opts = {});

// Ideal of the Zariski closure of u -> (phi_1(u), ..., phi_n(u)). Each
// parametrization entry is a polynomial in the single variable u.
Ideal implicitize(std::span<const Poly> parametrization, const VarList& targets,
                  const EngineOptions& opts = {});

// Substitutes `value` for `param`; the result lives in the ring without it.
Ideal specialize(const Ideal& i, const std::string& param, const Rational& value);

enum class ColengthMode { kAtOrigin, kGlobal };

// AT_ORIGIN: dim of the localization at 0 modulo I. GLOBAL: dim of Q[x]/I,
// the sum of local colengths over all points of V(I).
Colength colength(const Ideal& i, ColengthMode mode, const EngineOptions& opts = {});

// Colength at the origin. When Q[x]/I is finite dimensional this is the
// dimension of the subspace killed by a power of the maximal ideal at 0,
// found by linear algebra on the multiplication maps; otherwise the local
// standard basis is used.
Colength origin_colength(const Ideal& i, const EngineOptions& opts = {});

// Local Krull dimension at the origin read off the local standard basis; -1
// when the origin is not on V(I).
int local_dimension(const Ideal& i, const EngineOptions& opts = {});

}  // namespace curvesing

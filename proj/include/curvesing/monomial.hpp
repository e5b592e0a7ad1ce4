#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace curvesing {

// Upper bound on ring size. Elimination and quotient computations add at most
// two auxiliary variables to the user's ring.
inline constexpr std::size_t kMaxVars = 16;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  // this | other
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  // other / this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  // Copy with variables re-indexed: result[map[i]] = this[i]. A negative
  // target drops the variable and requires its exponent to be zero.
  Monomial remap(std::size_t new_nvars, std::span<const int> map) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;
  std::string to_string(std::span<const std::string> vars) const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind {
  kDegRevLex,     // global
  kNegDegRevLex,  // local, 1 > x_i
  kNegDegLex,     // local, used for cross-checks
  kElimination,   // global; first `block` variables eliminated
};

class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;

  static constexpr MonomialOrder degrevlex() { return MonomialOrder(OrderKind::kDegRevLex, 0); }
  static constexpr MonomialOrder negdegrevlex() {
    return MonomialOrder(OrderKind::kNegDegRevLex, 0);
  }
  static constexpr MonomialOrder negdeglex() { return MonomialOrder(OrderKind::kNegDegLex, 0); }
  static constexpr MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(OrderKind::kElimination, block);
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  bool is_global() const noexcept {
    return kind_ == OrderKind::kDegRevLex || kind_ == OrderKind::kElimination;
  }
  bool is_local() const noexcept { return !is_global(); }

  // <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(OrderKind kind, std::size_t block) : kind_(kind), block_(block) {}

  OrderKind kind_ = OrderKind::kDegRevLex;
  std::size_t block_ = 0;
};

// Krull dimension of k[x]/(monomials): size of the largest variable subset
// containing the support of no generator. A generating set containing 1
// yields -1 (empty quotient).
int monomial_ideal_dimension(std::span<const Monomial> gens, std::size_t nvars);

// Number of monomials outside the monomial ideal, or nullopt-like sentinel
// via `finite == false` when some variable has no pure power among gens.
struct StaircaseInfo {
  bool finite = false;
  std::uint64_t count = 0;
  unsigned max_degree = 0;  // largest degree of a standard monomial (finite case)
};

StaircaseInfo staircase(std::span<const Monomial> gens, std::size_t nvars);

// All monomials in `nvars` variables of total degree exactly `degree`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace curvesing

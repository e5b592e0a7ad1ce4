#include "curvesing/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "curvesing/error.hpp"

namespace curvesing {

namespace {

std::uint16_t checked_exponent(unsigned long long e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw InvalidArgument("monomial exponent overflow");
  }
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) throw InvalidArgument("too many ring variables");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = checked_exponent(exponents[i]);
    deg_ += exp_[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  deg_ -= exp_[i];
  exp_[i] = checked_exponent(e);
  deg_ += exp_[i];
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r.exp_[i] = checked_exponent(static_cast<unsigned long long>(exp_[i]) + other.exp_[i]);
  }
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(other.exp_[i] - exp_[i]);
  }
  r.deg_ = other.deg_ - deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.deg_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::remap(std::size_t new_nvars, std::span<const int> map) const {
  Monomial r(new_nvars);
  for (std::size_t i = 0; i < n_; ++i) {
    if (map[i] < 0) {
      if (exp_[i] != 0) throw InvalidArgument("cannot drop a variable that occurs");
      continue;
    }
    r.set(static_cast<std::size_t>(map[i]), exp_[i]);
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string(std::span<const std::string> vars) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

int revlex_tiebreak(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case OrderKind::kDegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tiebreak(a, b);
    case OrderKind::kNegDegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_tiebreak(a, b);
    case OrderKind::kNegDegLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::kElimination: {
      const std::size_t k = std::min(block_, a.size());
      if (int c = degrevlex_range(a, b, 0, k); c != 0) return c;
      return degrevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::kDegRevLex:
      return "degrevlex";
    case OrderKind::kNegDegRevLex:
      return "negdegrevlex";
    case OrderKind::kNegDegLex:
      return "negdeglex";
    case OrderKind::kElimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

int monomial_ideal_dimension(std::span<const Monomial> gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.is_one()) return -1;
  }
  std::vector<std::uint32_t> supports;
  supports.reserve(gens.size());
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (g[i] != 0) s |= 1u << i;
    }
    supports.push_back(s);
  }
  int best = 0;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) {
      return (s & ~subset) == 0;
    });
    if (independent) best = size;
  }
  return best;
}

StaircaseInfo staircase(std::span<const Monomial> gens, std::size_t nvars) {
  StaircaseInfo info;
  std::vector<unsigned> bound(nvars, 0);
  for (const auto& g : gens) {
    if (g.is_one()) {
      info.finite = true;
      return info;
    }
    std::size_t var = nvars;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (g[i] != 0) {
        var = i;
        ++nonzero;
      }
    }
    if (nonzero == 1 && (bound[var] == 0 || g[var] < bound[var])) bound[var] = g[var];
  }
  if (std::any_of(bound.begin(), bound.end(), [](unsigned b) { return b == 0; })) {
    return info;
  }
  info.finite = true;

  // Depth-first walk of the box, pruning at the first divisible monomial
  // along each coordinate (the complement of an ideal is an order ideal).
  Monomial m(nvars);
  auto divisible = [&](const Monomial& x) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(x); });
  };
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (var == nvars) {
      ++info.count;
      info.max_degree = std::max(info.max_degree, m.degree());
      return;
    }
    for (unsigned e = 0; e < bound[var]; ++e) {
      m.set(var, e);
      // Remaining coordinates are zero here, so this tests the smallest
      // monomial of the sub-box; if it is divisible so is the whole sub-box.
      if (divisible(m)) break;
      self(self, var + 1);
    }
    m.set(var, 0);
  };
  if (nvars == 0) {
    info.count = 1;
    return info;
  }
  walk(walk, 0);
  return info;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var + 1 == nvars) {
      m.set(var, left);
      out.push_back(m);
      m.set(var, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace curvesing

#include "curvesing/ideal.hpp"

#include <algorithm>
#include <unordered_map>

#include "curvesing/error.hpp"

namespace curvesing {

namespace {

std::size_t var_index(const VarList& ring, const std::string& name) {
  const auto it = std::find(ring.begin(), ring.end(), name);
  if (it == ring.end()) throw InvalidArgument("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - ring.begin());
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw InvalidArgument("ideals live in different rings");
}

// Embeds polynomials of `ring` into a ring with `extra` new variables placed
// in front.
std::vector<Poly> shift_right(std::span<const Poly> polys, std::size_t nvars, std::size_t extra) {
  std::vector<int> map(nvars);
  for (std::size_t k = 0; k < nvars; ++k) map[k] = static_cast<int>(k + extra);
  std::vector<Poly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.remap(nvars + extra, map));
  return out;
}

std::string fresh_name(const VarList& ring, const std::string& base) {
  std::string name = base;
  while (std::find(ring.begin(), ring.end(), name) != ring.end()) name += '_';
  return name;
}

}  // namespace

Ideal::Ideal(VarList ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  if (ring_.empty() || ring_.size() > kMaxVars) throw InvalidArgument("ring size out of range");
  for (const auto& g : gens_) {
    if (g.nvars() != ring_.size()) throw InvalidArgument("generator lives in a different ring");
  }
  std::erase_if(gens_, [](const Poly& p) { return p.is_zero(); });
  if (gens_.empty()) gens_.emplace_back(ring_.size());
}

Ideal Ideal::unit(VarList ring) {
  const std::size_t n = ring.size();
  return Ideal(std::move(ring), {Poly::constant(n, 1)});
}

Ideal Ideal::zero(VarList ring) {
  const std::size_t n = ring.size();
  return Ideal(std::move(ring), {Poly(n)});
}

Ideal Ideal::parse(VarList ring, std::span<const std::string> gens) {
  std::vector<Poly> polys;
  polys.reserve(gens.size());
  for (const auto& g : gens) polys.push_back(parse_poly(g, ring));
  return Ideal(std::move(ring), std::move(polys));
}

const Basis& Ideal::basis(const MonomialOrder& order, const EngineOptions& opts) const {
  {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, b] : cache_->entries) {
      if (o == order) return *b;
    }
  }
  auto computed = std::make_shared<const Basis>(compute_basis(gens_, order, opts));
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, b] : cache_->entries) {
    if (o == order) return *b;
  }
  cache_->entries.emplace_back(order, std::move(computed));
  return *cache_->entries.back().second;
}

bool Ideal::is_zero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Ideal::is_unit(const EngineOptions& opts) const { return groebner(opts).is_unit_ideal(); }

bool Ideal::contains(const Poly& p, const EngineOptions& opts) const {
  return normal_form(p, groebner(opts), opts).is_zero();
}

bool Ideal::contains_locally(const Poly& p, const EngineOptions& opts) const {
  return normal_form(p, local_basis(opts), opts).is_zero();
}

bool Ideal::subset_of(const Ideal& other, const EngineOptions& opts) const {
  require_same_ring(*this, other);
  return std::all_of(gens_.begin(), gens_.end(), [&](const Poly& g) { return other.contains(g, opts); });
}

bool Ideal::equals(const Ideal& other, const EngineOptions& opts) const {
  require_same_ring(*this, other);
  return groebner(opts) == other.groebner(opts);
}

std::vector<std::string> Ideal::gen_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string(ring_));
  return out;
}

std::vector<std::string> Ideal::canonical_strings(const EngineOptions& opts) const {
  std::vector<std::string> out;
  for (const auto& g : groebner(opts).generators()) out.push_back(g.to_string(ring_));
  if (out.empty()) out.emplace_back("0");
  return out;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Poly> gens;
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& i, std::span<const std::string> drop, const EngineOptions& opts) {
  const std::size_t n = i.nvars();
  std::vector<bool> dropped(n, false);
  for (const auto& name : drop) dropped[var_index(i.ring(), name)] = true;
  const auto k = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), true));
  if (k == n) throw InvalidArgument("cannot eliminate every variable");
  if (k == 0) return i;

  // Reorder so the eliminated block comes first.
  std::vector<int> to_block(n);
  std::vector<int> to_kept(n, -1);
  VarList kept_ring;
  std::size_t next_drop = 0;
  std::size_t next_keep = k;
  for (std::size_t v = 0; v < n; ++v) {
    if (dropped[v]) {
      to_block[v] = static_cast<int>(next_drop++);
    } else {
      to_block[v] = static_cast<int>(next_keep++);
      kept_ring.push_back(i.ring()[v]);
    }
  }
  std::vector<Poly> reordered;
  for (const auto& g : i.gens()) reordered.push_back(g.remap(n, to_block));
  const Basis b = groebner_basis(reordered, MonomialOrder::elimination(k), opts);

  std::vector<int> strip(n, -1);
  for (std::size_t v = k; v < n; ++v) strip[v] = static_cast<int>(v - k);
  std::vector<Poly> out;
  for (const auto& g : b.generators()) {
    bool free_of_block = true;
    for (std::size_t v = 0; v < k && free_of_block; ++v) free_of_block = !g.uses_variable(v);
    if (free_of_block) out.push_back(g.remap(n - k, strip));
  }
  return Ideal(std::move(kept_ring), std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b, const EngineOptions& opts) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  const std::size_t n = a.nvars();
  VarList ring{fresh_name(a.ring(), "s_")};
  ring.insert(ring.end(), a.ring().begin(), a.ring().end());
  const Poly s = Poly::variable(n + 1, 0);
  const Poly one_minus_s = Poly::constant(n + 1, 1) - s;
  std::vector<Poly> gens;
  for (const auto& f : shift_right(a.gens(), n, 1)) gens.push_back(s * f);
  for (const auto& g : shift_right(b.gens(), n, 1)) gens.push_back(one_minus_s * g);
  const std::string drop[] = {ring.front()};
  return eliminate(Ideal(std::move(ring), std::move(gens)), drop, opts);
}

Ideal quotient(const Ideal& i, const Ideal& j, const EngineOptions& opts) {
  require_same_ring(i, j);
  // Cheapest generators first; most later ones are then absorbed by the
  // membership test below without another elimination.
  std::vector<Poly> divisors;
  for (const auto& g : j.gens()) {
    if (!g.is_zero() && !i.contains(g, opts)) divisors.push_back(g);
  }
  if (divisors.empty()) return Ideal::unit(i.ring());
  std::stable_sort(divisors.begin(), divisors.end(), [](const Poly& a, const Poly& b) {
    return std::pair(a.degree(), a.size()) < std::pair(b.degree(), b.size());
  });
  if (divisors.front().is_constant()) return i;

  std::optional<Ideal> result;
  for (const auto& g : divisors) {
    // result * g in I means result is already inside (I : g).
    if (result && std::all_of(result->gens().begin(), result->gens().end(),
                              [&](const Poly& h) { return i.contains(h * g, opts); })) {
      continue;
    }
    const Ideal with_g = intersect(i, Ideal(i.ring(), {g}), opts);
    std::vector<Poly> divided;
    for (const auto& h : with_g.gens()) divided.push_back(h.divide_exact(g));
    Ideal part(i.ring(), std::move(divided));
    result = result ? intersect(*result, part, opts) : std::move(part);
  }
  return *result;
}

Ideal saturate_by_element(const Ideal& i, const Poly& g, const EngineOptions& opts) {
  const std::size_t n = i.nvars();
  VarList ring{fresh_name(i.ring(), "s_")};
  ring.insert(ring.end(), i.ring().begin(), i.ring().end());
  std::vector<Poly> gens = shift_right(i.gens(), n, 1);
  const Poly g_shifted = shift_right(std::span(&g, 1), n, 1).front();
  gens.push_back(Poly::constant(n + 1, 1) - Poly::variable(n + 1, 0) * g_shifted);
  const std::string drop[] = {ring.front()};
  return eliminate(Ideal(std::move(ring), std::move(gens)), drop, opts);
}

Saturation saturate(const Ideal& i, const Ideal& j, const EngineOptions& opts) {
  require_same_ring(i, j);
  // I : g^inf = I for one generator g of J already gives I : J = I.
  std::optional<Poly> witness;
  for (const auto& g : j.gens()) {
    if (g.is_zero() || g.is_constant()) continue;
    if (!witness || std::pair(g.degree(), g.size()) < std::pair(witness->degree(), witness->size())) witness = g;
  }
  Saturation sat{i, 0};
  while (true) {
    Ideal next = quotient(sat.ideal, j, opts);
    if (next.equals(sat.ideal, opts)) break;
    sat.ideal = std::move(next);
    ++sat.growth_steps;
    if (witness && saturate_by_element(sat.ideal, *witness, opts).equals(sat.ideal, opts)) break;
  }
  return sat;
}

Ideal implicitize(std::span<const Poly> parametrization, const VarList& targets, const EngineOptions& opts) {
  if (parametrization.size() != targets.size()) {
    throw InvalidArgument("parametrization length differs from the number of target variables");
  }
  if (std::all_of(parametrization.begin(), parametrization.end(), [](const Poly& p) { return p.is_zero(); })) {
    throw DegenerateInput("parametrization is identically zero");
  }
  for (const auto& p : parametrization) {
    if (p.nvars() != 1) throw InvalidArgument("parametrization entries must be univariate");
    if (p.constant_term() != 0) throw DegenerateInput("parametrization does not pass through the origin");
  }
  const std::size_t n = targets.size();
  VarList ring{fresh_name(targets, "u")};
  ring.insert(ring.end(), targets.begin(), targets.end());
  std::vector<int> u_map{0};
  std::vector<Poly> gens;
  for (std::size_t k = 0; k < n; ++k) {
    gens.push_back(Poly::variable(n + 1, k + 1) - parametrization[k].remap(n + 1, u_map));
  }
  const std::string drop[] = {ring.front()};
  return eliminate(Ideal(std::move(ring), std::move(gens)), drop, opts);
}

Ideal specialize(const Ideal& i, const std::string& param, const Rational& value) {
  const std::size_t idx = var_index(i.ring(), param);
  const std::size_t n = i.nvars();
  std::vector<int> map(n);
  VarList ring;
  for (std::size_t v = 0, next = 0; v < n; ++v) {
    if (v == idx) {
      map[v] = -1;
    } else {
      map[v] = static_cast<int>(next++);
      ring.push_back(i.ring()[v]);
    }
  }
  if (ring.empty()) throw InvalidArgument("specialization would leave an empty ring");
  std::vector<Poly> gens;
  for (const auto& g : i.gens()) gens.push_back(g.substitute(idx, value).remap(n - 1, map));
  return Ideal(std::move(ring), std::move(gens));
}

Colength colength(const Ideal& i, ColengthMode mode, const EngineOptions& opts) {
  const Basis& b = mode == ColengthMode::kAtOrigin ? i.local_basis(opts) : i.groebner(opts);
  return staircase_count(b);
}

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon basis of the span of `rows`.
std::vector<Row> row_basis(std::vector<Row> rows, std::size_t cols) {
  std::vector<Row> basis;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = r[pivots[k]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) r[c] -= f * basis[k][c];
    }
    std::size_t p = 0;
    while (p < cols && r[p] == 0) ++p;
    if (p == cols) continue;
    const Rational lead = r[p];
    for (auto& v : r) v /= lead;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = basis[k][p];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) basis[k][c] -= f * r[c];
    }
    basis.push_back(std::move(r));
    pivots.push_back(p);
  }
  return basis;
}

}  // namespace

Colength origin_colength(const Ideal& i, const EngineOptions& opts) {
  const Basis& gb = i.groebner(opts);
  if (!staircase_count(gb)) return colength(i, ColengthMode::kAtOrigin, opts);
  const auto basis = standard_monomials(gb);
  const std::size_t n = basis.size();
  if (n == 0) return 0;
  std::unordered_map<Monomial, std::size_t, MonomialHash> position;
  for (std::size_t k = 0; k < n; ++k) position.emplace(basis[k], k);

  // Multiplication by each variable on Q[x]/I.
  std::vector<std::vector<Row>> mult;
  for (std::size_t v = 0; v < i.nvars(); ++v) {
    std::vector<Row> m(n, Row(n));
    for (std::size_t col = 0; col < n; ++col) {
      const Poly image = normal_form(Poly::term(basis[col] * Monomial::variable(i.nvars(), v)), gb, opts);
      for (const auto& t : image.terms()) m[position.at(t.mono)][col] = t.coef;
    }
    mult.push_back(std::move(m));
  }

  // K_0 = 0, K_{j+1} = {v : x_i v in K_j for all i}; K_j = ker(C_j). The
  // limit is the part killed by a power of the maximal ideal at the origin.
  std::vector<Row> c(n, Row(n));
  for (std::size_t k = 0; k < n; ++k) c[k][k] = 1;
  while (true) {
    std::vector<Row> stacked;
    for (const auto& m : mult) {
      for (const auto& row : c) {
        Row out(n);
        for (std::size_t l = 0; l < n; ++l) {
          if (row[l] == 0) continue;
          for (std::size_t col = 0; col < n; ++col) {
            if (m[l][col] != 0) out[col] += row[l] * m[l][col];
          }
        }
        stacked.push_back(std::move(out));
      }
    }
    auto next = row_basis(std::move(stacked), n);
    if (next.size() == c.size()) break;
    c = std::move(next);
  }
  return n - c.size();
}

int local_dimension(const Ideal& i, const EngineOptions& opts) {
  const Basis& b = i.local_basis(opts);
  if (b.is_zero_ideal()) return static_cast<int>(i.nvars());
  return b.dimension();
}

}  // namespace curvesing

#include "curvesing/basis.hpp"

#include <algorithm>
#include <deque>

#include "curvesing/error.hpp"

namespace curvesing {

namespace {

struct ITerm {
  Monomial mono;
  Integer coef;
};

// Working polynomial: integer coefficients, terms sorted by the engine's
// order (largest first), kept primitive with a positive leading coefficient.
struct WPoly {
  std::vector<ITerm> terms;
  unsigned sugar = 0;

  bool zero() const noexcept { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
  const Integer& lc() const { return terms.front().coef; }
  unsigned max_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms) d = std::max(d, t.mono.degree());
    return d;
  }
  unsigned ecart() const noexcept { return zero() ? 0 : max_degree() - lm().degree(); }
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
  std::uint64_t serial;
};

class Restart {};

class Engine {
 public:
  Engine(std::size_t nvars, MonomialOrder order, const EngineOptions& opts)
      : nvars_(nvars), order_(order), opts_(opts) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  unsigned cap() const noexcept { return cap_; }
  void set_cap(unsigned cap) noexcept { cap_ = cap; }

  WPoly from_poly(const Poly& p) const {
    if (p.nvars() != nvars_) throw InvalidArgument("generator lives in a different ring");
    Integer den_lcm = 1;
    for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    WPoly w;
    w.terms.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (cap_ != 0 && t.mono.degree() >= cap_) continue;
      Integer c = t.coef.get_num() * (den_lcm / t.coef.get_den());
      w.terms.push_back({t.mono, std::move(c)});
    }
    std::sort(w.terms.begin(), w.terms.end(),
              [&](const ITerm& a, const ITerm& b) { return order_.greater(a.mono, b.mono); });
    w.sugar = w.max_degree();
    make_primitive(w, nullptr);
    return w;
  }

  Poly to_poly(const WPoly& w, const Rational& scale = 1) const {
    std::vector<Term> terms;
    terms.reserve(w.terms.size());
    for (const auto& t : w.terms) terms.push_back({t.mono, Rational(t.coef) / scale});
    return Poly::from_terms(nvars_, std::move(terms));
  }

  void tick() {
    if (++steps_ > opts_.step_budget) {
      throw StepBudgetExceeded("basis computation exceeded the step budget of " +
                               std::to_string(opts_.step_budget) + " reductions");
    }
  }

  // Divides by the content and normalizes the sign. `scale` tracks the factor
  // relating the current polynomial to the one the caller started from.
  void make_primitive(WPoly& f, Rational* scale) const {
    if (f.zero()) return;
    Integer g = 0;
    for (const auto& t : f.terms) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(f.lc()) < 0) g = -g;
    if (g == 1) return;
    for (auto& t : f.terms) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
    if (scale != nullptr) *scale /= g;
  }

  // f <- a*f - b*m*g, cancelling the term f.terms[idx] against lt(m*g).
  void reduce_step(WPoly& f, std::size_t idx, const WPoly& g, Rational* scale) {
    tick();
    const Integer& c = f.terms[idx].coef;
    const Integer& lg = g.lc();
    Integer d;
    mpz_gcd(d.get_mpz_t(), c.get_mpz_t(), lg.get_mpz_t());
    Integer a = lg / d;
    Integer b = c / d;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    const Monomial m = g.lm().cofactor_in(f.terms[idx].mono);

    std::vector<ITerm> out;
    out.reserve(f.terms.size() + g.terms.size());
    for (std::size_t k = 0; k < idx; ++k) {
      out.push_back({f.terms[k].mono, a == 1 ? f.terms[k].coef : Integer(a * f.terms[k].coef)});
    }
    std::size_t i = idx + 1;
    std::size_t j = 1;
    Monomial gm;
    while (i < f.terms.size() || j < g.terms.size()) {
      if (j < g.terms.size()) gm = m * g.terms[j].mono;
      int cmp;
      if (i == f.terms.size()) {
        cmp = -1;
      } else if (j == g.terms.size()) {
        cmp = 1;
      } else {
        cmp = order_.compare(f.terms[i].mono, gm);
      }
      if (cmp > 0) {
        if (cap_ == 0 || f.terms[i].mono.degree() < cap_) {
          out.push_back({f.terms[i].mono, a == 1 ? f.terms[i].coef : Integer(a * f.terms[i].coef)});
        }
        ++i;
      } else if (cmp < 0) {
        if (cap_ == 0 || gm.degree() < cap_) out.push_back({gm, Integer(-b * g.terms[j].coef)});
        ++j;
      } else {
        Integer s = a * f.terms[i].coef - b * g.terms[j].coef;
        if (s != 0 && (cap_ == 0 || gm.degree() < cap_)) out.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    f.terms = std::move(out);
    f.sugar = std::max(f.sugar, m.degree() + g.sugar);
    if (scale != nullptr) *scale *= a;
  }

  const WPoly* find_reducer(const Monomial& mono, std::span<const WPoly* const> reducers) const {
    for (const WPoly* g : reducers) {
      if (g->lm().divides(mono)) return g;
    }
    return nullptr;
  }

  // Reduces every term of f; requires termination of plain reduction
  // (global order, or local order with a cap).
  void reduce_full(WPoly& f, std::span<const WPoly* const> reducers, Rational* scale,
                   std::size_t start = 0) {
    std::size_t i = start;
    unsigned since_primitive = 0;
    while (i < f.terms.size()) {
      const WPoly* g = find_reducer(f.terms[i].mono, reducers);
      if (g == nullptr) {
        ++i;
        continue;
      }
      reduce_step(f, i, *g, scale);
      if (++since_primitive == 8) {
        make_primitive(f, scale);
        since_primitive = 0;
      }
    }
    make_primitive(f, scale);
  }

  // Mora's weak normal form with minimal-ecart reducer selection (ties go to
  // the earliest reducer).
  void nf_mora(WPoly& h, std::span<const WPoly* const> basis, Rational* scale) {
    std::vector<const WPoly*> reducers(basis.begin(), basis.end());
    std::vector<unsigned> ecarts;
    ecarts.reserve(reducers.size());
    for (const WPoly* g : reducers) ecarts.push_back(g->ecart());
    std::deque<WPoly> extra;
    unsigned since_primitive = 0;
    while (!h.zero()) {
      std::size_t best = reducers.size();
      for (std::size_t k = 0; k < reducers.size(); ++k) {
        if (!reducers[k]->lm().divides(h.lm())) continue;
        if (best == reducers.size() || ecarts[k] < ecarts[best]) best = k;
      }
      if (best == reducers.size()) break;
      const unsigned ecart_h = h.ecart();
      const WPoly* g = reducers[best];
      if (ecarts[best] > ecart_h) {
        extra.push_back(h);
        reducers.push_back(&extra.back());
        ecarts.push_back(ecart_h);
      }
      reduce_step(h, 0, *g, scale);
      if (++since_primitive == 8) {
        make_primitive(h, scale);
        since_primitive = 0;
      }
    }
    make_primitive(h, scale);
  }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  EngineOptions opts_;
  unsigned cap_ = 0;
  std::uint64_t steps_ = 0;
};

// Pair bookkeeping shared by the global and local completion loops.
class Completion {
 public:
  Completion(Engine& engine, bool product_criterion, bool chain_criterion)
      : engine_(engine), product_(product_criterion), chain_(chain_criterion) {}

  std::deque<WPoly>& store() { return store_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  std::vector<const WPoly*> basis_ptrs() const {
    std::vector<const WPoly*> out;
    out.reserve(basis_.size());
    for (std::size_t k : basis_) out.push_back(&store_[k]);
    return out;
  }

  bool has_pairs() const { return !pairs_.empty(); }

  Pair pop_pair() {
    const MonomialOrder& order = engine_.order();
    auto better = [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (order.is_global()) {
        if (int c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
      } else if (a.lcm.degree() != b.lcm.degree()) {
        return a.lcm.degree() < b.lcm.degree();
      }
      return a.serial < b.serial;
    };
    auto it = std::min_element(pairs_.begin(), pairs_.end(), better);
    Pair p = *it;
    *it = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  WPoly s_polynomial(const Pair& p) {
    const WPoly& f = store_[p.i];
    const WPoly& g = store_[p.j];
    WPoly s;
    const Monomial mf = f.lm().cofactor_in(p.lcm);
    s.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
      Monomial m = mf * t.mono;
      if (engine_.cap() != 0 && m.degree() >= engine_.cap() && !s.terms.empty()) continue;
      s.terms.push_back({std::move(m), t.coef});
    }
    s.sugar = f.sugar + mf.degree();
    engine_.reduce_step(s, 0, g, nullptr);
    return s;
  }

  // Gebauer-Moeller update after adding store_[h] to the basis.
  void insert(std::size_t h) {
    const Monomial lh = store_[h].lm();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> fresh;
    fresh.reserve(basis_.size());
    for (std::size_t g : basis_) {
      const Monomial& lg = store_[g].lm();
      fresh.push_back({g, lh.lcm(lg), lh.coprime(lg)});
    }
    std::vector<Candidate> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Candidate& c = fresh[k];
      bool keep = true;
      if (chain_ && !(product_ && c.coprime)) {
        for (std::size_t l = k + 1; l < fresh.size() && keep; ++l) {
          if (fresh[l].lcm.divides(c.lcm)) keep = false;
        }
        for (const auto& d : kept) {
          if (!keep) break;
          if (d.lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    if (chain_) {
      std::erase_if(pairs_, [&](const Pair& p) {
        if (!lh.divides(p.lcm)) return false;
        const Monomial& li = store_[p.i].lm();
        const Monomial& lj = store_[p.j].lm();
        return !(li.lcm(lh) == p.lcm) && !(lj.lcm(lh) == p.lcm);
      });
    }
    for (const auto& c : kept) {
      if (product_ && c.coprime) continue;
      const WPoly& fg = store_[c.g];
      const WPoly& fh = store_[h];
      const unsigned sugar = std::max(fg.sugar + c.lcm.degree() - fg.lm().degree(),
                                      fh.sugar + c.lcm.degree() - fh.lm().degree());
      pairs_.push_back({c.g, h, c.lcm, sugar, serial_++});
    }
    std::erase_if(basis_, [&](std::size_t g) { return lh.divides(store_[g].lm()); });
    basis_.push_back(h);
  }

  std::size_t add(WPoly w) {
    store_.push_back(std::move(w));
    const std::size_t h = store_.size() - 1;
    insert(h);
    return h;
  }

 private:
  Engine& engine_;
  bool product_;
  bool chain_;
  std::deque<WPoly> store_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  std::uint64_t serial_ = 0;
};

std::size_t ring_size(std::span<const Poly> gens) {
  if (gens.empty()) throw InvalidArgument("basis computation needs at least one generator");
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens) {
    if (g.nvars() != n) throw InvalidArgument("generators live in different rings");
  }
  return n;
}

std::vector<Poly> sorted_output(const Engine& engine, std::vector<const WPoly*> polys) {
  std::sort(polys.begin(), polys.end(), [&](const WPoly* a, const WPoly* b) {
    return engine.order().compare(a->lm(), b->lm()) < 0;
  });
  std::vector<Poly> out;
  out.reserve(polys.size());
  for (const WPoly* w : polys) out.push_back(engine.to_poly(*w, Rational(w->lc())));
  return out;
}

Basis unit_basis(std::size_t nvars, const MonomialOrder& order) {
  return Basis(nvars, order, {Poly::constant(nvars, 1)}, true, 0);
}

}  // namespace

Basis::Basis(std::size_t nvars, MonomialOrder order, std::vector<Poly> generators, bool reduced,
             unsigned corner_degree)
    : nvars_(nvars), order_(order), gens_(std::move(generators)), reduced_(reduced),
      corner_(corner_degree) {}

bool Basis::is_unit_ideal() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Poly& p) { return !p.is_zero() && p.is_constant(); });
}

std::vector<Monomial> Basis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_term(order_).mono);
  return out;
}

int Basis::dimension() const {
  const auto lms = leading_monomials();
  return monomial_ideal_dimension(lms, nvars_);
}

Basis groebner_basis(std::span<const Poly> gens, const MonomialOrder& order, const EngineOptions& opts) {
  if (!order.is_global()) throw InvalidArgument("groebner_basis requires a global order");
  const std::size_t nvars = ring_size(gens);
  Engine engine(nvars, order, opts);
  Completion completion(engine, opts.pair_criteria, opts.pair_criteria);

  auto admit = [&](WPoly w) -> bool {
    auto reducers = completion.basis_ptrs();
    engine.reduce_full(w, reducers, nullptr);
    if (w.zero()) return false;
    if (w.lm().is_one()) return true;
    completion.add(std::move(w));
    return false;
  };

  std::vector<WPoly> inputs;
  for (const auto& g : gens) {
    WPoly w = engine.from_poly(g);
    if (!w.zero()) inputs.push_back(std::move(w));
  }
  std::sort(inputs.begin(), inputs.end(),
            [&](const WPoly& a, const WPoly& b) { return order.compare(a.lm(), b.lm()) < 0; });
  for (auto& w : inputs) {
    if (admit(std::move(w))) return unit_basis(nvars, order);
  }
  while (completion.has_pairs()) {
    const Pair p = completion.pop_pair();
    if (admit(completion.s_polynomial(p))) return unit_basis(nvars, order);
  }

  // Interreduce the minimal basis.
  std::vector<WPoly> reduced;
  const auto minimal = completion.basis_ptrs();
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const WPoly*> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    WPoly w = *minimal[k];
    engine.reduce_full(w, others, nullptr, 1);
    reduced.push_back(std::move(w));
  }
  std::vector<const WPoly*> ptrs;
  for (const auto& w : reduced) ptrs.push_back(&w);
  return Basis(nvars, order, sorted_output(engine, ptrs), true, 0);
}

Basis standard_basis(std::span<const Poly> gens, const MonomialOrder& order, const EngineOptions& opts) {
  if (!order.is_local()) throw InvalidArgument("standard_basis requires a local order");
  const std::size_t nvars = ring_size(gens);
  Engine engine(nvars, order, opts);

  std::vector<Poly> inputs(gens.begin(), gens.end());
  while (true) {
    Completion completion(engine, false, opts.pair_criteria);
    std::vector<WPoly> work;
    std::size_t next_input = 0;
    try {
      auto corner_check = [&]() {
        if (!opts.highest_corner) return;
        std::vector<Monomial> lms;
        for (const WPoly* w : completion.basis_ptrs()) lms.push_back(w->lm());
        const StaircaseInfo info = staircase(lms, nvars);
        if (!info.finite) return;
        const unsigned cap = info.max_degree + 1;
        if (engine.cap() != 0 && cap >= engine.cap()) return;
        // Every monomial of degree `cap` is a leading monomial, hence
        // m^cap lies in the local ideal. Restart modulo m^cap.
        std::vector<Poly> next;
        for (const auto& w : completion.store()) next.push_back(engine.to_poly(w));
        for (std::size_t k = next_input; k < work.size(); ++k) next.push_back(engine.to_poly(work[k]));
        engine.set_cap(cap);
        inputs = std::move(next);
        throw Restart{};
      };
      auto admit = [&](WPoly w) -> bool {
        auto reducers = completion.basis_ptrs();
        engine.nf_mora(w, reducers, nullptr);
        if (w.zero()) return false;
        if (w.lm().is_one()) return true;
        completion.add(std::move(w));
        corner_check();
        return false;
      };

      for (const auto& g : inputs) {
        WPoly w = engine.from_poly(g);
        if (!w.zero()) work.push_back(std::move(w));
      }
      std::stable_sort(work.begin(), work.end(),
                       [&](const WPoly& a, const WPoly& b) { return order.compare(a.lm(), b.lm()) > 0; });
      bool unit = false;
      while (!unit && next_input < work.size()) unit = admit(std::move(work[next_input++]));
      while (!unit && completion.has_pairs()) {
        const Pair p = completion.pop_pair();
        unit = admit(completion.s_polynomial(p));
      }
      if (unit) return unit_basis(nvars, order);

      const auto minimal = completion.basis_ptrs();
      if (engine.cap() == 0) {
        return Basis(nvars, order, sorted_output(engine, minimal), false, 0);
      }
      std::vector<WPoly> reduced;
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const WPoly*> others;
        for (std::size_t l = 0; l < minimal.size(); ++l) {
          if (l != k) others.push_back(minimal[l]);
        }
        WPoly w = *minimal[k];
        engine.reduce_full(w, others, nullptr, 1);
        reduced.push_back(std::move(w));
      }
      // Terms of degree >= cap were dropped as members of the ideal; make the
      // monomials of that degree explicit so the basis stands on its own.
      for (const auto& mono : monomials_of_degree(nvars, engine.cap())) {
        const bool covered = std::any_of(reduced.begin(), reduced.end(),
                                         [&](const WPoly& w) { return w.lm().divides(mono); });
        if (!covered) reduced.push_back(WPoly{{ITerm{mono, 1}}, mono.degree()});
      }
      std::vector<const WPoly*> ptrs;
      for (const auto& w : reduced) ptrs.push_back(&w);
      return Basis(nvars, order, sorted_output(engine, ptrs), true, engine.cap());
    } catch (const Restart&) {
      continue;
    }
  }
}

Basis compute_basis(std::span<const Poly> gens, const MonomialOrder& order, const EngineOptions& opts) {
  return order.is_global() ? groebner_basis(gens, order, opts) : standard_basis(gens, order, opts);
}

Poly normal_form(const Poly& p, const Basis& b, const EngineOptions& opts) {
  if (p.nvars() != b.nvars()) throw InvalidArgument("polynomial and basis live in different rings");
  Engine engine(b.nvars(), b.order(), opts);
  engine.set_cap(b.corner_degree());
  std::vector<WPoly> gens;
  gens.reserve(b.generators().size());
  for (const auto& g : b.generators()) gens.push_back(engine.from_poly(g));
  std::vector<const WPoly*> ptrs;
  for (const auto& g : gens) ptrs.push_back(&g);

  // from_poly clears denominators and content; recover that factor.
  WPoly w = engine.from_poly(p);
  if (w.zero()) return Poly(p.nvars());
  Rational scale = Rational(w.lc()) / p.leading_term(engine.order()).coef;
  if (b.order().is_global() || b.corner_degree() != 0) {
    engine.reduce_full(w, ptrs, &scale);
  } else {
    engine.nf_mora(w, ptrs, &scale);
  }
  return engine.to_poly(w, scale);
}

Colength staircase_count(const Basis& b) {
  if (b.is_zero_ideal()) {
    if (b.nvars() == 0) return 1;
    return std::nullopt;
  }
  const auto lms = b.leading_monomials();
  const StaircaseInfo info = staircase(lms, b.nvars());
  if (!info.finite) return std::nullopt;
  return info.count;
}

std::vector<Monomial> standard_monomials(const Basis& b) {
  if (!staircase_count(b)) throw InvalidArgument("infinite staircase");
  const auto lms = b.leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  std::vector<Monomial> layer;
  if (standard(Monomial(b.nvars()))) layer.emplace_back(b.nvars());
  while (!layer.empty()) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (std::size_t v = 0; v < b.nvars(); ++v) {
        const Monomial up = m * Monomial::variable(b.nvars(), v);
        if (standard(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace curvesing

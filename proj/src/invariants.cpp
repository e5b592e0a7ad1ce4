#include "curvesing/invariants.hpp"

#include <algorithm>
#include <map>

#include "curvesing/error.hpp"

namespace curvesing {

namespace {

// Seed-stream tags for the independent random choices of one trial.
enum Tag : std::uint64_t {
  kTagLinear = 1,
  kTagMinors = 2,
  kTagCi = 3,
  kTagCiCheck = 4,
  kTagReduction = 5,
  kTagPoints = 6,
};

std::vector<Poly> variables(std::size_t n) {
  std::vector<Poly> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(Poly::variable(n, v));
  return out;
}

Ideal with(const Ideal& i, const Poly& p) {
  std::vector<Poly> gens = i.gens();
  gens.push_back(p);
  return Ideal(i.ring(), std::move(gens));
}

std::vector<Poly> jacobian_minors(const CurveGerm& x) {
  const PolyMatrix jac = jacobian_matrix(x.equations());
  return minors_of_size(jac, x.nvars() - 1);
}

// Whether V(Z) has dimension at most one at the origin, certified by a linear
// form cutting it down to a point.
bool is_curve_at_origin(const Ideal& z, std::uint64_t seed, const InvariantConfig& config) {
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt) {
    const Poly l = random_combination(variables(z.nvars()), derive_seed(seed, kTagCiCheck, attempt),
                                      config.bound);
    if (colength(with(z, l), ColengthMode::kAtOrigin, config.engine)) return true;
  }
  return false;
}

ConstMatrix checked_user_matrix(const CurveGerm& x, const ConstMatrix& a) {
  const std::size_t rows = x.nvars() - 1;
  if (a.rows() != rows || a.cols() != x.equations().size()) {
    throw InvalidArgument("complete intersection matrix must be " + std::to_string(rows) + " x " +
                          std::to_string(x.equations().size()));
  }
  if (a.rank() < rows) throw GenericityFailure("complete intersection matrix has rank below n - 1");
  return a;
}

struct TrialOutcome {
  Trial trial;
  std::optional<std::uint64_t> e_reduction;
  Link link;
};

TrialOutcome run_trial(const CurveGerm& x, std::uint64_t seed, const InvariantConfig& config) {
  InvariantConfig local = config;
  local.seed = seed;
  const std::uint64_t m = multiplicity(x, local);
  const std::uint64_t e = hs_mult_jacobian(x, local);

  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt) {
    InvariantConfig draw = local;
    draw.seed = derive_seed(seed, kTagCi, attempt);
    const auto [z, a] = generic_ci(x, draw);
    Link link = residual_link(z, a, x, config.engine);
    const Colength i0 = origin_colength(sum(x.ideal(), link.w), config.engine);
    if (!i0) {
      if (config.ci_matrix) throw GenericityFailure("the given matrix yields an infinite discrepancy");
      continue;
    }
    std::optional<std::uint64_t> reduction;
    if (config.ci_matrix) {
      const ModulePresentation pres = jacobian_presentation(x);
      for (unsigned b_attempt = 0; b_attempt <= config.max_retries && !reduction; ++b_attempt) {
        const ConstMatrix b = random_matrix(pres.matrix.cols(), pres.generic_rank,
                                            derive_seed(seed, kTagReduction, b_attempt), config.bound);
        try {
          reduction = br_multiplicity(pres, a, b, x, config.engine);
        } catch (const GenericityFailure&) {
        }
      }
      if (!reduction) throw GenericityFailure("no reduction of the Jacobian module for the given matrix");
    }
    return {Trial{seed, m, e, *i0}, reduction, std::move(link)};
  }
  throw GenericityFailure("no complete intersection with finite discrepancy after retries");
}

bool same_outcome(const TrialOutcome& a, const TrialOutcome& b) {
  return a.trial == b.trial && a.e_reduction == b.e_reduction;
}

// Degree of the squarefree part of a univariate polynomial (coefficients by
// increasing degree).
using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::size_t squarefree_degree(Univariate p) {
  trim(p);
  if (p.size() <= 1) return 0;
  Univariate d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  Univariate a = p;
  Univariate b = d;
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return (p.size() - 1) - (a.size() - 1);
}

// Characteristic polynomial by Faddeev-LeVerrier.
Univariate characteristic_polynomial(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  Univariate coeffs(n + 1);
  coeffs[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // mk <- m * (mk + c_{n-k+1} I)
    std::vector<std::vector<Rational>> prev = mk;
    for (std::size_t i = 0; i < n; ++i) prev[i][i] += coeffs[n - k + 1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += m[i][l] * prev[l][j];
        mk[i][j] = acc;
      }
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += mk[i][i];
    coeffs[n - k] = -trace / static_cast<unsigned long>(k);
  }
  return coeffs;
}

}  // namespace

CurveGerm::CurveGerm(VarList ring, std::vector<Poly> equations)
    : CurveGerm(Ideal(std::move(ring), std::move(equations))) {}

CurveGerm::CurveGerm(Ideal ideal) : ideal_(std::move(ideal)) { validate(); }

CurveGerm CurveGerm::from_parametrization(VarList ring, std::span<const Poly> parametrization,
                                          const EngineOptions& opts) {
  return CurveGerm(implicitize(parametrization, ring, opts));
}

void CurveGerm::validate() const {
  if (nvars() < 2) throw DegenerateInput("a curve germ needs at least two variables");
  if (ideal_.is_zero()) throw DegenerateInput("no nonzero equations");
  for (const auto& g : ideal_.gens()) {
    if (g.constant_term() != 0) throw DegenerateInput("an equation does not vanish at the origin");
  }
  if (local_dimension(ideal_) != 1) throw DegenerateInput("the equations do not define a curve at the origin");
}

VarList FamilyGerm::full_ring() const {
  VarList out = ring;
  out.push_back(param);
  return out;
}

CurveGerm FamilyGerm::fiber(const Rational& t, const EngineOptions& opts) const {
  if (!equations.empty()) {
    const Ideal fam(full_ring(), equations);
    const Ideal fiber_ideal = specialize(fam, param, t);
    return CurveGerm(fiber_ideal.ring(), fiber_ideal.gens());
  }
  if (parametrization.empty()) throw InvalidArgument("family has neither equations nor parametrization");
  std::vector<Poly> at_t;
  const std::vector<int> keep_u{0, -1};
  for (const auto& p : parametrization) at_t.push_back(p.substitute(1, t).remap(1, keep_u));
  return CurveGerm::from_parametrization(ring, at_t, opts);
}

Poly random_combination(std::span<const Poly> polys, std::uint64_t seed, unsigned bound) {
  if (polys.empty()) throw InvalidArgument("combination of an empty list");
  const ConstMatrix c = random_matrix(1, polys.size(), seed, bound);
  return curvesing::apply(c, polys).front();
}

std::uint64_t multiplicity(const CurveGerm& x, const InvariantConfig& config) {
  const auto vars = variables(x.nvars());
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt) {
    const Poly l = random_combination(vars, derive_seed(config.seed, kTagLinear, attempt), config.bound);
    if (const Colength c = colength(with(x.ideal(), l), ColengthMode::kAtOrigin, config.engine)) return *c;
  }
  throw GenericityFailure("no linear form with finite colength after retries");
}

Ideal jacobian_ideal(const CurveGerm& x) {
  std::vector<Poly> gens = x.equations();
  const auto minors = jacobian_minors(x);
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal(x.ring(), std::move(gens));
}

std::uint64_t hs_mult_jacobian(const CurveGerm& x, const InvariantConfig& config) {
  const auto minors = jacobian_minors(x);
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt) {
    const Poly g = random_combination(minors, derive_seed(config.seed, kTagMinors, attempt), config.bound);
    if (const Colength c = colength(with(x.ideal(), g), ColengthMode::kAtOrigin, config.engine)) return *c;
  }
  if (!colength(jacobian_ideal(x), ColengthMode::kAtOrigin, config.engine)) {
    throw DegenerateInput("the Jacobian ideal is not primary to the maximal ideal");
  }
  throw GenericityFailure("no combination of minors with finite colength after retries");
}

std::pair<Ideal, ConstMatrix> generic_ci(const CurveGerm& x, const InvariantConfig& config) {
  const std::size_t rows = x.nvars() - 1;
  const std::size_t p = x.equations().size();
  if (p < rows) throw DegenerateInput("fewer equations than the codimension");
  if (config.ci_matrix) {
    const ConstMatrix a = checked_user_matrix(x, *config.ci_matrix);
    Ideal z(x.ring(), curvesing::apply(a, x.equations()));
    if (!is_curve_at_origin(z, config.seed, config)) {
      throw GenericityFailure("the given matrix does not cut out a curve");
    }
    return {std::move(z), a};
  }
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt) {
    const std::uint64_t seed = derive_seed(config.seed, kTagCi, attempt);
    const ConstMatrix a = random_matrix(rows, p, seed, config.bound);
    if (a.rank() < rows) continue;
    Ideal z(x.ring(), curvesing::apply(a, x.equations()));
    if (is_curve_at_origin(z, seed, config)) return {std::move(z), a};
  }
  throw GenericityFailure("no complete intersection curve after retries");
}

Link residual_link(const Ideal& z, const ConstMatrix& a, const CurveGerm& x, const EngineOptions& opts) {
  if (!z.subset_of(x.ideal(), opts)) throw InvalidArgument("Z does not contain X");
  Saturation sat = saturate(z, x.ideal(), opts);
  return Link{z, a, std::move(sat.ideal), sat.single_quotient_sufficed()};
}

std::uint64_t ci_discrepancy(const CurveGerm& x, const Ideal& w, const EngineOptions& opts) {
  if (w.is_unit(opts)) return 0;
  const Colength c = origin_colength(sum(x.ideal(), w), opts);
  if (!c) throw GenericityFailure("X and W share a component");
  return *c;
}

InvariantReport milnor_number(const CurveGerm& x, const InvariantConfig& config) {
  if (config.trials < 2) throw InvalidArgument("at least two trials are needed");
  std::vector<TrialOutcome> outcomes;
  for (unsigned k = 0; k < config.trials; ++k) outcomes.push_back(run_trial(x, config.seed + k, config));

  auto majority = [&]() -> const TrialOutcome* {
    for (const auto& o : outcomes) {
      const auto votes = std::count_if(outcomes.begin(), outcomes.end(),
                                       [&](const TrialOutcome& p) { return same_outcome(o, p); });
      if (2 * static_cast<std::size_t>(votes) > outcomes.size()) return &o;
    }
    return nullptr;
  };
  const bool agreement = std::all_of(outcomes.begin(), outcomes.end(),
                                     [&](const TrialOutcome& o) { return same_outcome(o, outcomes.front()); });
  const TrialOutcome* chosen = agreement ? &outcomes.front() : nullptr;
  for (unsigned extra = 0; !chosen && extra < config.max_retries; ++extra) {
    outcomes.push_back(run_trial(x, config.seed + config.trials + extra, config));
    chosen = majority();
  }
  if (!chosen) throw GenericityFailure("trials disagree and no majority emerged");

  InvariantReport r;
  r.m = chosen->trial.m;
  r.e_jac = chosen->trial.e_jac;
  r.i0 = chosen->trial.i0;
  r.e_reduction = chosen->e_reduction;
  const auto e = static_cast<std::int64_t>(r.e_reduction.value_or(r.e_jac));
  r.mu = e - static_cast<std::int64_t>(r.i0) - static_cast<std::int64_t>(r.m) + 1;
  r.polar_degree = r.mu + static_cast<std::int64_t>(r.m) - 1;
  if (r.mu < 0) throw GenericityFailure("negative Milnor number; the draws were not generic");
  if (chosen->link.w.is_unit(config.engine)) {
    r.w0_generators = {"1"};
  } else {
    r.w0_generators = chosen->link.w.canonical_strings(config.engine);
  }
  r.ci_matrix = chosen->link.a.to_string();
  r.single_quotient_sufficed = chosen->link.single_quotient_sufficed;
  for (const auto& o : outcomes) r.trials.push_back(o.trial);
  r.agreement = agreement;
  return r;
}

ModulePresentation jacobian_presentation(const CurveGerm& x) {
  return ModulePresentation{jacobian_matrix(x.equations()), x.nvars() - 1};
}

std::uint64_t br_multiplicity(const ModulePresentation& p, const ConstMatrix& a, const ConstMatrix& b,
                              const CurveGerm& ambient, const EngineOptions& opts) {
  const std::size_t e = p.generic_rank;
  if (a.rows() != e || a.cols() != p.matrix.rows() || b.rows() != p.matrix.cols() || b.cols() != e) {
    throw InvalidArgument("reduction matrices have the wrong shape");
  }
  const Poly det = (a * p.matrix * b).determinant();
  if (ambient.ideal().contains_locally(det, opts)) throw GenericityFailure("the reduction determinant vanishes on X");
  const Colength c = colength(with(ambient.ideal(), det), ColengthMode::kAtOrigin, opts);
  if (!c) throw GenericityFailure("the reduction determinant has infinite colength");
  return *c;
}

std::uint64_t count_points(const Ideal& i, std::uint64_t seed, const EngineOptions& opts) {
  const Basis& gb = i.groebner(opts);
  const auto basis = standard_monomials(gb);
  const std::size_t n = basis.size();
  if (n == 0) return 0;
  std::map<std::vector<unsigned>, std::size_t> position;
  auto key = [](const Monomial& m) {
    std::vector<unsigned> k;
    for (std::size_t v = 0; v < m.size(); ++v) k.push_back(m[v]);
    return k;
  };
  for (std::size_t k = 0; k < n; ++k) position.emplace(key(basis[k]), k);

  std::uint64_t best = 0;
  for (std::uint64_t attempt = 0; attempt < 2; ++attempt) {
    const Poly l = random_combination(variables(i.nvars()), derive_seed(seed, kTagPoints, attempt), 97);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t col = 0; col < n; ++col) {
      const Poly image = normal_form(l * Poly::term(basis[col]), gb, opts);
      for (const auto& t : image.terms()) m[position.at(key(t.mono))][col] = t.coef;
    }
    best = std::max<std::uint64_t>(best, squarefree_degree(characteristic_polynomial(m)));
  }
  return best;
}

FamilyProfile family_profile(const FamilyGerm& f, std::span<const Rational> samples,
                             const InvariantConfig& config) {
  if (f.equations.empty()) throw ParseError("the family command needs equations");
  if (samples.empty()) throw InvalidArgument("no samples");
  const VarList full = f.full_ring();
  const std::size_t rows = f.ring.size() - 1;
  FamilyProfile out;
  if (config.ci_matrix) {
    out.a = *config.ci_matrix;
    if (out.a.rows() != rows || out.a.cols() != f.equations.size()) {
      throw InvalidArgument("complete intersection matrix must be " + std::to_string(rows) + " x " +
                            std::to_string(f.equations.size()));
    }
    if (out.a.rank() < rows) throw GenericityFailure("complete intersection matrix has rank below n - 1");
  } else {
    for (unsigned attempt = 0; attempt <= config.max_retries && out.a.rows() == 0; ++attempt) {
      const ConstMatrix a = random_matrix(rows, f.equations.size(), derive_seed(config.seed, kTagCi, attempt),
                                          config.bound);
      if (a.rank() == rows) out.a = a;
    }
    if (out.a.rows() == 0) throw GenericityFailure("no full-rank matrix after retries");
  }
  const Ideal family_x(full, f.equations);
  const Ideal family_z(full, curvesing::apply(out.a, f.equations));

  for (const auto& requested : samples) {
    bool done = false;
    for (unsigned shift = 0; shift <= config.max_retries && !done; ++shift) {
      const Rational t = requested + shift;
      const Ideal x_t = specialize(family_x, f.param, t);
      const Ideal z_t = specialize(family_z, f.param, t);
      if (x_t.is_unit(config.engine)) continue;
      const Saturation w_t = saturate(z_t, x_t, config.engine);
      const Ideal meet = sum(x_t, w_t.ideal);
      const Colength global = colength(meet, ColengthMode::kGlobal, config.engine);
      if (!global) continue;
      ProfileRow row;
      row.t = t;
      row.global_number = *global;
      row.points = count_points(meet, config.seed, config.engine);
      row.transversal = row.points == row.global_number;
      row.link_growth_steps = w_t.growth_steps;
      out.rows.push_back(row);
      done = true;
    }
    if (!done) throw DegenerateInput("every sample near t = " + requested.get_str() + " is degenerate");
  }
  const ProfileRow* first = nullptr;
  for (const auto& row : out.rows) {
    if (row.t == 0) continue;
    if (!first) first = &row;
    if (row.global_number != first->global_number) out.constant = false;
  }
  return out;
}

WhitneyVerdict whitney_check(const FamilyGerm& f, std::span<const Rational> samples,
                             const InvariantConfig& config) {
  std::vector<Rational> ts(samples.begin(), samples.end());
  if (std::find(ts.begin(), ts.end(), Rational(0)) == ts.end()) ts.insert(ts.begin(), Rational(0));
  WhitneyVerdict out;
  for (const auto& t : ts) {
    const CurveGerm fiber = f.fiber(t, config.engine);
    const InvariantReport r = milnor_number(fiber, config);
    WhitneyRow row;
    row.t = t;
    row.e_jac = r.e_reduction.value_or(r.e_jac);
    row.i0 = r.i0;
    row.difference = static_cast<std::int64_t>(row.e_jac) - static_cast<std::int64_t>(row.i0);
    out.rows.push_back(row);
  }
  out.constant = std::all_of(out.rows.begin(), out.rows.end(),
                             [&](const WhitneyRow& r) { return r.difference == out.rows.front().difference; });
  return out;
}

}  // namespace curvesing

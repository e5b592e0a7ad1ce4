#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvesing/monomial.hpp"

namespace curvesing {

// GMP keeps mpq values canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using VarList = std::vector<std::string>;

Rational parse_rational(std::string_view text);

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse polynomial over Q. Terms are kept sorted by degrevlex, largest first,
// with no zero coefficients, so equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly term(const Monomial& m, const Rational& c = 1);
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  // Largest and smallest total degree among the terms; 0 for the zero poly.
  unsigned degree() const noexcept;
  unsigned order() const noexcept;
  bool uses_variable(std::size_t index) const noexcept;

  // Largest term for the given order; requires !is_zero().
  const Term& leading_term(const MonomialOrder& order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t index) const;
  // Replace variable `index` by a constant; the ring is unchanged.
  Poly substitute(std::size_t index, const Rational& value) const;
  // Replace variable `index` by a polynomial of the same ring.
  Poly compose(std::size_t index, const Poly& value) const;
  Poly remap(std::size_t new_nvars, std::span<const int> map) const;
  // Drop all terms of total degree >= cap.
  Poly truncate(unsigned cap) const;
  // Divide by the leading coefficient (degrevlex); zero stays zero.
  Poly monic() const;
  // Exact quotient this / divisor; throws if the division leaves a remainder.
  Poly divide_exact(const Poly& divisor) const;

  std::string to_string(std::span<const std::string> vars) const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

// Grammar: integers, rationals a/b, variable names, + - * ^ and parentheses.
Poly parse_poly(std::string_view text, std::span<const std::string> vars);

// Canonical text form; identical to Poly::to_string.
inline std::string print_poly(const Poly& p, std::span<const std::string> vars) {
  return p.to_string(vars);
}

}  // namespace curvesing

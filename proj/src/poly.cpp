#include "curvesing/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "curvesing/error.hpp"

namespace curvesing {

namespace {

constexpr MonomialOrder kCanonical = MonomialOrder::degrevlex();

bool canonical_greater(const Term& a, const Term& b) { return kCanonical.greater(a.mono, b.mono); }

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  const auto slash = s.find('/');
  auto all_digits = [&](std::size_t lo, std::size_t hi) {
    if (lo >= hi) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(lo),
                       s.begin() + static_cast<std::ptrdiff_t>(hi),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!all_digits(start, num_end) ||
      (slash != std::string::npos && !all_digits(slash + 1, s.size()))) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  return term(Monomial::variable(nvars, index), 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.size());
  if (c != 0) {
    p.terms_.push_back({m, c});
    p.terms_.back().coef.canonicalize();
  }
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Poly p(nvars);
  for (auto& t : terms) {
    if (t.mono.size() != nvars) throw InvalidArgument("term arity differs from ring size");
    if (t.coef.get_den() == 0) throw InvalidArgument("zero denominator");
    t.coef.canonicalize();
  }
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), canonical_greater);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coef += t.coef;
    } else {
      if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coef == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

unsigned Poly::degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Poly::order() const noexcept { return terms_.empty() ? 0 : terms_.back().mono.degree(); }

bool Poly::uses_variable(std::size_t index) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[index] != 0; });
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  if (order == kCanonical) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = kCanonical.compare(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw InvalidArgument("polynomials live in different rings");
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  Poly p(a.nvars_);
  p.terms_ = std::move(prod);
  p.normalize();
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= nvars_) throw InvalidArgument("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    out.push_back({m, t.coef * e});
  }
  return from_terms(nvars_, std::move(out));
}

Poly Poly::substitute(std::size_t index, const Rational& value) const {
  if (index >= nvars_) throw InvalidArgument("substitution variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[index];
    m.set(index, 0);
    Rational c = t.coef;
    if (e > 0) {
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), e);
      c *= power;
    }
    if (c != 0) out.push_back({m, c});
  }
  return from_terms(nvars_, std::move(out));
}

Poly Poly::compose(std::size_t index, const Poly& value) const {
  require_same_ring(*this, value);
  Poly result(nvars_);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[index];
    m.set(index, 0);
    result += term(m, t.coef) * value.pow(e);
  }
  return result;
}

Poly Poly::remap(std::size_t new_nvars, std::span<const int> map) const {
  if (map.size() != nvars_) throw InvalidArgument("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.remap(new_nvars, map), t.coef});
  return from_terms(new_nvars, std::move(out));
}

Poly Poly::truncate(unsigned cap) const {
  Poly r(nvars_);
  for (const auto& t : terms_) {
    if (t.mono.degree() < cap) r.terms_.push_back(t);
  }
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / terms_.front().coef);
}

Poly Poly::divide_exact(const Poly& divisor) const {
  require_same_ring(*this, divisor);
  if (divisor.is_zero()) throw InvalidArgument("division by zero polynomial");
  const Term& lead = divisor.terms_.front();
  Poly rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.terms_.front();
    if (!lead.mono.divides(t.mono)) throw InvalidArgument("inexact polynomial division");
    Term q{lead.mono.cofactor_in(t.mono), t.coef / lead.coef};
    rem -= term(q.mono, q.coef) * divisor;
    quotient.push_back(std::move(q));
  }
  return from_terms(nvars_, std::move(quotient));
}

std::string Poly::to_string(std::span<const std::string> vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coef) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coef);
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.mono.to_string(vars);
    } else {
      out += mag.get_str() + '*' + t.mono.to_string(vars);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      if (!at_end() && text_[pos_] == '-') fail("negative exponent");
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 5) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = read_digits();
      const std::size_t save = pos_;
      if (accept('/')) {
        const std::string den = read_digits();
        if (den.empty()) {
          pos_ = save;
          fail("expected denominator");
        }
        literal += '/' + den;
      }
      return Poly::constant(vars_.size(), parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> vars) {
  if (vars.size() > kMaxVars) throw InvalidArgument("too many ring variables");
  return PolyParser(text, vars).parse();
}

}  // namespace curvesing

#include "bipoisson/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace bipoisson {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(VarId v, unsigned exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({v, static_cast<std::uint16_t>(exp)});
    m.degree_ = exp;
  }
  return m;
}

unsigned Monomial::degree_in(VarId v) const {
  for (const auto& f : factors_) {
    if (f.var == v) return f.exp;
    if (v < f.var) break;
  }
  return 0;
}

Monomial Monomial::without(VarId v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.var == v) continue;
    m.factors_.push_back(f);
    m.degree_ += f.exp;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) {
      m.factors_.push_back({i->var, static_cast<std::uint16_t>(i->exp + j->exp)});
      ++i;
      ++j;
    } else if (i->var < j->var) {
      m.factors_.push_back(*i++);
    } else {
      m.factors_.push_back(*j++);
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->var != j->var) {
      return i->var < j->var ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->exp != j->exp) return i->exp <=> j->exp;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var.code()) << 16) | f.exp;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Polynomial

EvalError::EvalError(VarId missing)
    : std::out_of_range("no value assigned to variable " + missing.name()), missing_(missing) {}

namespace {

bool term_greater(const Term& x, const Term& y) { return grlex(x.mono, y.mono) > 0; }

// Sorts descending and merges equal monomials; drops zero coefficients.
void canonicalize(std::vector<Term>& terms) {
  if (terms.empty()) return;
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sum != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, second one scaled by sign (+1 or -1).
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    auto cmp = grlex(i->mono, j->mono);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({j->mono, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->mono, sign > 0 ? j->coeff : Rational(-j->coeff)});
  return out;
}

}  // namespace

// Rationals built as Rational(p, q) are not reduced by gmp; every entry
// point that accepts a caller's coefficient reduces it once.
Polynomial::Polynomial(const Rational& c) {
  if (c != 0) {
    terms_.push_back({Monomial{}, c});
    terms_.back().coeff.canonicalize();
  }
}

Polynomial Polynomial::variable(VarId v) { return monomial(Monomial::of(v), 1); }

Polynomial Polynomial::monomial(Monomial m, Rational c) {
  Polynomial p;
  c.canonicalize();
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Polynomial::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(v));
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) vars.push_back(f.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::mentions(VarId v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.degree_in(v) > 0; });
}

Polynomial Polynomial::coefficient_of(VarId v, unsigned e) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.degree_in(v) == e) out.push_back({t.mono.without(v), t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  if (q.is_zero()) return *this;
  if (is_zero()) return *this = q;
  terms_ = merge(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  if (q.is_zero()) return *this;
  terms_ = merge(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial& Polynomial::operator*=(const Rational& scale) {
  Rational c = scale;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  // Multiplying by a single term keeps grlex order, no re-sort needed.
  if (p.size() == 1 || q.size() == 1) {
    const Polynomial& single = p.size() == 1 ? p : q;
    const Polynomial& other = p.size() == 1 ? q : p;
    const Term& s = single.terms_[0];
    Polynomial out;
    out.terms_.reserve(other.size());
    for (const auto& t : other.terms_) out.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    return out;
  }
  std::vector<Term> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (p.terms_[i].coeff != q.terms_[i].coeff || !(p.terms_[i].mono == q.terms_[i].mono)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || t.mono.is_one()) {
      out += bipoisson::to_string(mag);
      need_star = true;
    }
    for (const auto& f : t.mono.factors()) {
      if (need_star) out += "*";
      out += f.var.name();
      if (f.exp > 1) out += "^" + std::to_string(f.exp);
      need_star = true;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(const Polynomial& p, VarId v) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.degree_in(v);
    if (e == 0) continue;
    out.push_back({t.mono.without(v) * Monomial::of(v, e - 1), t.coeff * e});
  }
  // Differentiation by one variable is injective on the surviving monomials
  // but may break grlex order, so canonicalize.
  return Polynomial::from_terms(std::move(out));
}

Polynomial substitute(const Polynomial& p, VarId v, const Polynomial& r) {
  if (!p.mentions(v)) return p;
  std::vector<Polynomial> powers{Polynomial(1)};
  PolyBuilder out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.degree_in(v);
    while (powers.size() <= e) powers.push_back(powers.back() * r);
    out.add_product(Polynomial::monomial(t.mono.without(v), t.coeff), powers[e]);
  }
  return out.build();
}

Rational eval(const Polynomial& p, const Assignment& assignment) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational value = t.coeff;
    for (const auto& f : t.mono.factors()) {
      auto it = assignment.find(f.var);
      if (it == assignment.end()) throw EvalError(f.var);
      Rational power = 1;
      for (unsigned k = 0; k < f.exp; ++k) power *= it->second;
      value *= power;
    }
    total += value;
  }
  return total;
}

Polynomial eval_partial(const Polynomial& p, const Assignment& assignment) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Rational value = t.coeff;
    Monomial rest;
    for (const auto& f : t.mono.factors()) {
      auto it = assignment.find(f.var);
      if (it == assignment.end()) {
        rest = rest * Monomial::of(f.var, f.exp);
      } else {
        for (unsigned k = 0; k < f.exp; ++k) value *= it->second;
      }
    }
    out.push_back({std::move(rest), std::move(value)});
  }
  return Polynomial::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// PolyBuilder

void PolyBuilder::add(const Polynomial& p) {
  pending_.insert(pending_.end(), p.terms().begin(), p.terms().end());
}

void PolyBuilder::add(const Polynomial& p, const Rational& scale) {
  Rational s = scale;
  s.canonicalize();
  if (s == 0) return;
  for (const auto& t : p.terms()) pending_.push_back({t.mono, t.coeff * s});
}

void PolyBuilder::add_product(const Polynomial& p, const Polynomial& q) {
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) pending_.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
}

void PolyBuilder::add_product(const Polynomial& p, const Polynomial& q, const Rational& factor) {
  Rational scale = factor;
  scale.canonicalize();
  if (scale == 0) return;
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) pending_.push_back({a.mono * b.mono, a.coeff * b.coeff * scale});
  }
}

void PolyBuilder::add_term(Monomial m, Rational c) {
  c.canonicalize();
  if (c != 0) pending_.push_back({std::move(m), std::move(c)});
}

Polynomial PolyBuilder::build() {
  auto p = Polynomial::from_terms(std::move(pending_));
  pending_.clear();
  return p;
}

}  // namespace bipoisson

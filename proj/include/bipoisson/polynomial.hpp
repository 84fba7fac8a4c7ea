#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bipoisson/rational.hpp"
#include "bipoisson/var.hpp"

namespace bipoisson {

struct VarPower {
  VarId var;
  std::uint16_t exp;

  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product of variables, stored sparsely: only variables with a
/// positive exponent, sorted by VarId.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, unsigned exp = 1);

  bool is_one() const { return factors_.empty(); }
  unsigned degree() const { return degree_; }
  unsigned degree_in(VarId v) const;
  std::span<const VarPower> factors() const { return {factors_.data(), factors_.size()}; }

  /// This monomial with every power of v removed.
  Monomial without(VarId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

  /// Graded lexicographic order: higher total degree is greater; ties are
  /// broken lexicographically with smaller VarId acting as the larger variable.
  friend std::strong_ordering grlex(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  boost::container::small_vector<VarPower, 6> factors_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

using Assignment = std::map<VarId, Rational>;

/// eval() found a variable that the assignment does not cover.
class EvalError : public std::out_of_range {
 public:
  explicit EvalError(VarId missing);
  VarId missing() const { return missing_; }

 private:
  VarId missing_;
};

/// Sparse multivariate polynomial with Rational coefficients.
///
/// Terms are kept in strictly descending graded lexicographic order with no
/// zero coefficients, so equal polynomials have identical term lists and
/// serialization is byte-stable.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT

  static Polynomial variable(VarId v);
  static Polynomial monomial(Monomial m, Rational c);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);
  /// Inverse of to_string(); throws ParseError.
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term (zero when absent).
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  unsigned degree() const;
  unsigned degree_in(VarId v) const;
  /// Variables occurring in the polynomial, ascending.
  std::vector<VarId> variables() const;
  bool mentions(VarId v) const;
  /// Polynomial coefficient of v^e when viewed as a polynomial in v.
  Polynomial coefficient_of(VarId v, unsigned e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& p, const Polynomial& q);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial partial(const Polynomial& p, VarId v);
/// Replaces every occurrence of v by r and expands.
Polynomial substitute(const Polynomial& p, VarId v, const Polynomial& r);
/// Exact value; throws EvalError naming the first unassigned variable.
Rational eval(const Polynomial& p, const Assignment& assignment);
/// Replaces the assigned variables only; the rest stay symbolic.
Polynomial eval_partial(const Polynomial& p, const Assignment& assignment);

/// Collects many summands and canonicalizes once at the end. Repeated
/// Polynomial::operator+= re-merges the running sum each time; this does not.
class PolyBuilder {
 public:
  void add(const Polynomial& p);
  void add(const Polynomial& p, const Rational& scale);
  void add_product(const Polynomial& p, const Polynomial& q);
  void add_product(const Polynomial& p, const Polynomial& q, const Rational& scale);
  void add_term(Monomial m, Rational c);
  Polynomial build();

 private:
  std::vector<Term> pending_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace bipoisson

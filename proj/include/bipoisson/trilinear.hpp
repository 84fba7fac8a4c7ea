#pragma once

#include <array>
#include <map>

#include "bipoisson/brackets.hpp"

namespace bipoisson {

/// Alternating trilinear form on the coordinate differentials of a CoordSet,
/// stored on index triples a < b < c.
class Trilinear {
 public:
  explicit Trilinear(CoordSet coords) : coords_(std::move(coords)) {}

  const CoordSet& coords() const { return coords_; }
  /// Value on (du_a, du_b, du_c) for any positions; sign follows the
  /// permutation that sorts them, zero on repeats.
  Polynomial at(std::size_t a, std::size_t b, std::size_t c) const;
  /// a < b < c required.
  void set(std::size_t a, std::size_t b, std::size_t c, Polynomial value);
  void add(std::size_t a, std::size_t b, std::size_t c, const Polynomial& value);
  const std::map<std::array<std::size_t, 3>, Polynomial>& entries() const { return values_; }

  Trilinear& operator+=(const Trilinear& o);
  Trilinear& operator-=(const Trilinear& o);
  Trilinear& operator*=(const Rational& s);
  friend Trilinear operator+(Trilinear a, const Trilinear& b) { return a += b; }
  friend Trilinear operator-(Trilinear a, const Trilinear& b) { return a -= b; }
  friend Trilinear operator*(const Rational& s, Trilinear a) { return a *= s; }
  friend bool operator==(const Trilinear&, const Trilinear&) = default;

 private:
  CoordSet coords_;
  std::map<std::array<std::size_t, 3>, Polynomial> values_;
};

/// sum over cyclic permutations of {{f1, f2}, f3}.
Polynomial jacobiator(const BracketTable& t, const Polynomial& f1, const Polynomial& f2, const Polynomial& f3);

/// Trilinear form of [P, P] obtained from the Jacobiator: -2 sum_cyc {{u,v},w}.
Trilinear jacobi_form(const BracketTable& t, unsigned jobs = 1);
/// 1/2 (J(A + B) - J(A) - J(B)): the trilinear form of [A, B].
Trilinear polarized_form(const BracketTable& a, const BracketTable& b, unsigned jobs = 1);
/// <du ^ dv ^ dw, X ^ P> = X(u){v,w} + X(v){w,u} + X(w){u,v}.
Trilinear wedge_form(const VectorFieldX& x, const BracketTable& p);

/// "(S[1,2], S[2,1], S0)"
std::string triple_name(const CoordSet& coords, std::size_t a, std::size_t b, std::size_t c);

}  // namespace bipoisson

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bipoisson/polynomial.hpp"
#include "bipoisson/tensor.hpp"

namespace bipoisson {

/// Coordinates of (gl(N) + C)*: S_11 .. S_NN in VarId order, then S0.
/// The restricted set omits S_NN, which is eliminated through sum_i S_ii = 0.
class CoordSet {
 public:
  static CoordSet full(int n);
  static CoordSet restricted(int n);

  int dim() const { return n_; }
  bool is_restricted() const { return restricted_; }
  const std::vector<VarId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  /// Position in members(), or nullopt for a foreign variable.
  std::optional<std::size_t> index_of(VarId v) const;
  bool contains(VarId v) const { return index_of(v).has_value(); }

  friend bool operator==(const CoordSet& a, const CoordSet& b) {
    return a.n_ == b.n_ && a.restricted_ == b.restricted_;
  }

 private:
  CoordSet(int n, bool restricted);
  int n_;
  bool restricted_;
  std::vector<VarId> members_;
};

/// Bivector in coordinates: {u, v} for u < v is stored, {v, u} is served as
/// its negation and {u, u} as zero.
class BracketTable {
 public:
  explicit BracketTable(CoordSet coords, std::optional<Rational> lambda = std::nullopt);

  const CoordSet& coords() const { return coords_; }
  int dim() const { return coords_.dim(); }
  bool is_restricted() const { return coords_.is_restricted(); }
  /// Scaling parameter of the S0 row for quadratic tables; none for others.
  const std::optional<Rational>& lambda() const { return lambda_; }
  void set_lambda(std::optional<Rational> l) { lambda_ = std::move(l); }

  /// By position in coords().
  Polynomial at(std::size_t a, std::size_t b) const;
  Polynomial at(VarId u, VarId v) const;
  /// Stored entry for a < b without copying.
  const Polynomial& upper(std::size_t a, std::size_t b) const { return upper_[slot(a, b)]; }
  void set(VarId u, VarId v, Polynomial value);
  void set(std::size_t a, std::size_t b, Polynomial value);

  /// Tables over the same coordinates; lambda metadata is dropped.
  friend BracketTable operator+(const BracketTable& p, const BracketTable& q);
  friend BracketTable operator*(const Polynomial& s, const BracketTable& p);
  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t slot(std::size_t a, std::size_t b) const;

  CoordSet coords_;
  std::optional<Rational> lambda_;
  std::vector<Polynomial> upper_;
};

/// Vector field: component X(u) for each coordinate u.
class VectorFieldX {
 public:
  explicit VectorFieldX(CoordSet coords);

  const CoordSet& coords() const { return coords_; }
  const Polynomial& at(VarId u) const;
  const Polynomial& at(std::size_t a) const { return comps_[a]; }
  void set(VarId u, Polynomial value);
  /// X(f) = sum_u X(u) df/du.
  Polynomial apply(const Polynomial& f) const;
  bool is_zero() const;

  friend bool operator==(const VectorFieldX&, const VectorFieldX&) = default;

 private:
  CoordSet coords_;
  std::vector<Polynomial> comps_;
};

Polynomial coordinate(int i, int j);
/// sum_k S_kk over the full coordinates.
Polynomial trace_polynomial(int n);

/// Lie-Poisson bracket {S_ij, S_kl}_1 = delta_jk S_il - delta_li S_kj with S0
/// central, over the full coordinates.
BracketTable linear_bracket(int n);

/// H = sum b_{klnm} S_mn S_lk - 1/2 sum c_{klnm} c_{mnn'm'} S_lk S_m'n'.
Polynomial hamiltonian_H(const Tensor4& c, const Tensor4& b);

/// Closed form of the hamiltonian field of H with respect to the linear bracket:
/// component at S_kl is
///   sum (-c_{ksnm} c_{mnn'm'} S_m'n' S_sl + c_{slnm} c_{mnn'm'} S_m'n' S_ks)
///   + 2 sum (b_{ksnm} S_mn S_sl - b_{slnm} S_mn S_ks),
/// which equals {H, S_kl}_1. The S0 component is zero.
VectorFieldX ham_vector_field(const Tensor4& c, const Tensor4& b);

/// {S_ij, S_kl}_2 = S0 (delta_jk S_il - delta_li S_kj)
///   + sum (c_{kjnm} S_mn S_il - c_{ilnm} S_mn S_kj)
///   + sum (c_{iskt} S_sj S_tl - c_{sjtl} S_is S_kt),
/// {S0, S_kl}_2 = lambda * ham_vector_field(c, b)(S_kl).
/// Throws PreconditionError when lambda = 0 or N differs.
BracketTable quadratic_bracket(const Tensor4& c, const Tensor4& b, const Rational& lambda, unsigned jobs = 1);

/// Polynomial of the full coordinates rewritten on the restricted ones.
Polynomial restrict_poly(const Polynomial& p, int n);
/// Drops S_NN and substitutes S_NN = -sum_{i<N} S_ii in every entry.
BracketTable restrict_sl(const BracketTable& t);
VectorFieldX restrict_sl(const VectorFieldX& x);

/// sum_{u,v} {u,v} df/du dg/dv. Throws PreconditionError when f or g
/// involves a coordinate outside t's coordinate set.
Polynomial bracket_of(const BracketTable& t, const Polynomial& f, const Polynomial& g);
/// {f, w} for a coordinate w of t: sum_u {u, w} df/du.
Polynomial bracket_with_coordinate(const BracketTable& t, const Polynomial& f, std::size_t w);

}  // namespace bipoisson

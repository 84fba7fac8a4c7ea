#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bipoisson/polynomial.hpp"
#include "bipoisson/report.hpp"

namespace bipoisson {

/// 1-based tensor indices.
using Index4 = std::array<std::uint8_t, 4>;
using Index6 = std::array<std::uint8_t, 6>;

/// Sparse element of gl(N) (x) gl(N): coefficient of E_ij (x) E_kl at (i,j,k,l).
/// Entries are polynomials so that parametric families are handled in one pass.
class Tensor4 {
 public:
  explicit Tensor4(int n);

  int dim() const { return n_; }
  /// Zero when the entry is not stored.
  const Polynomial& at(int i, int j, int k, int l) const;
  const Polynomial& at(const Index4& idx) const;
  void set(int i, int j, int k, int l, Polynomial value);
  void add(int i, int j, int k, int l, const Polynomial& value);
  const std::map<Index4, Polynomial>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// T'_{ijkl} = T_{klij}.
  Tensor4 pair_swapped() const;
  Tensor4 substitute(VarId v, const Polynomial& r) const;
  Tensor4 eval_partial(const Assignment& assignment) const;

  Tensor4& operator+=(const Tensor4& other);
  Tensor4& operator-=(const Tensor4& other);
  Tensor4& operator*=(const Polynomial& s);
  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
  friend Tensor4 operator*(const Polynomial& s, Tensor4 a) { return a *= s; }
  friend bool operator==(const Tensor4&, const Tensor4&) = default;

  /// Dense row-major copy (N^4 slots) for contraction kernels.
  std::vector<Polynomial> dense() const;

 private:
  void check(int i, int j, int k, int l) const;

  int n_;
  std::map<Index4, Polynomial> entries_;
};

/// Builds a tensor from listed representatives, adding the pair partner
/// (k,l,i,j) with the same (sym) or opposite (skew) sign.
Tensor4 make_skew(int n, std::initializer_list<std::pair<Index4, Polynomial>> listed);
Tensor4 make_sym(int n, std::initializer_list<std::pair<Index4, Polynomial>> listed);

/// Dense N x N rational matrix, 1-based access.
class MatrixX {
 public:
  explicit MatrixX(int n) : n_(n), data_(static_cast<std::size_t>(n * n)) {}
  static MatrixX identity(int n);
  /// Matrix unit E_ij.
  static MatrixX unit(int n, int i, int j);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const { return data_[idx(i, j)]; }
  Rational& at(int i, int j) { return data_[idx(i, j)]; }
  Rational trace() const;

  friend MatrixX operator+(const MatrixX& a, const MatrixX& b);
  friend MatrixX operator-(const MatrixX& a, const MatrixX& b);
  friend MatrixX operator*(const MatrixX& a, const MatrixX& b);
  friend MatrixX operator*(const Rational& s, MatrixX a);
  friend bool operator==(const MatrixX&, const MatrixX&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<Rational> data_;
};

/// Orthogonal projection gl(N) -> sl(N): removes (1/N) tr(m) times the identity.
MatrixX project_pN(const MatrixX& m);

/// Tensor Casimir of sl(N): Omega_{ijkl} = delta_jk delta_il - (1/N) delta_ij delta_kl.
Tensor4 omega(int n);

/// Skew pairs (c_{ijkl} = -c_{klij}) and both partial traces vanish.
Report validate_c(const Tensor4& c);
/// Symmetric pairs (b_{ijkl} = b_{klij}) and both partial traces vanish.
Report validate_b(const Tensor4& b);

/// Sparse map from index sextuples to the residual of the linear-quadratic
/// constraint on (c, b). Empty iff (c, b) is a solution.
class Residual6 {
 public:
  explicit Residual6(int n) : n_(n) {}

  int dim() const { return n_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::map<Index6, Polynomial>& entries() const { return entries_; }
  const Polynomial& at(const Index6& idx) const;
  /// Smallest index sextuple with a nonzero entry.
  std::optional<std::pair<Index6, Polynomial>> first() const;
  /// Invariance under (i,j) -> (k,l) -> (m,n) -> (i,j).
  bool cyclic_invariant() const;

  void set(const Index6& idx, Polynomial value);
  friend bool operator==(const Residual6&, const Residual6&) = default;

 private:
  int n_;
  std::map<Index6, Polynomial> entries_;
};

std::string format_index(const Index4& idx);
std::string format_index(const Index6& idx);

/// Left-hand side minus right-hand side of the defining equation of (c, b)
/// at every sextuple (i,j,k,l,m,n). Throws PreconditionError on dimension
/// mismatch. `jobs` threads split the sextuples; the result is independent
/// of it.
Residual6 fp4_residual(const Tensor4& c, const Tensor4& b, unsigned jobs = 1);

/// (ad_X (x) Id) T: commutator with X on the first tensor slot.
Tensor4 ad_first(const MatrixX& x, const Tensor4& t);
/// (Id (x) ad_X) T.
Tensor4 ad_second(const MatrixX& x, const Tensor4& t);

struct GaugeResult {
  Tensor4 c;
  Tensor4 b;
  Report c_check;  // validate_c of the new c
  Report b_check;  // validate_b of the new b (need not pass)
};

/// c' = c + (ad_X (x) Id) Omega,
/// b' = b + 1/2 ((ad_X)^2 (x) Id) Omega + (ad_X (x) Id) c.
/// Throws PreconditionError when X is not traceless or dimensions differ.
GaugeResult gauge_transform(const Tensor4& c, const Tensor4& b, const MatrixX& x);

}  // namespace bipoisson

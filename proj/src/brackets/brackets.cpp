#include "bipoisson/brackets.hpp"

#include <string>

#include "bipoisson/errors.hpp"
#include "bipoisson/parallel.hpp"

namespace bipoisson {

namespace {

const Polynomial kZero;

void require_dim(int n) {
  if (n < 2 || n > VarId::kMaxDim) throw PreconditionError("N must be in 2.." + std::to_string(VarId::kMaxDim));
}

// Matrix of linear forms M_pq = sum_{n,m} t_{pqnm} S_mn.
std::vector<Polynomial> contract_last_pair(const Tensor4& t) {
  const int n = t.dim();
  std::vector<PolyBuilder> acc(static_cast<std::size_t>(n * n));
  for (const auto& [idx, v] : t.entries()) {
    // t_{p q n m} S_{m n}: idx = (p, q, n, m)
    acc[static_cast<std::size_t>((idx[0] - 1) * n + (idx[1] - 1))].add(v * Polynomial::variable(VarId::coord(idx[3], idx[2])));
  }
  std::vector<Polynomial> out;
  out.reserve(acc.size());
  for (auto& a : acc) out.push_back(a.build());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

CoordSet::CoordSet(int n, bool restricted) : n_(n), restricted_(restricted) {
  require_dim(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(restricted && i == n && j == n)) members_.push_back(VarId::coord(i, j));
  members_.push_back(VarId::s0());
}

CoordSet CoordSet::full(int n) { return CoordSet(n, false); }
CoordSet CoordSet::restricted(int n) { return CoordSet(n, true); }

std::optional<std::size_t> CoordSet::index_of(VarId v) const {
  if (v == VarId::s0()) return members_.size() - 1;
  if (v.kind() != VarKind::Coordinate) return std::nullopt;
  int i = v.row(), j = v.col();
  if (i < 1 || i > n_ || j < 1 || j > n_) return std::nullopt;
  if (restricted_ && i == n_ && j == n_) return std::nullopt;
  return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
}

// ---------------------------------------------------------------------------

BracketTable::BracketTable(CoordSet coords, std::optional<Rational> lambda)
    : coords_(std::move(coords)), lambda_(std::move(lambda)) {
  const std::size_t m = coords_.size();
  upper_.resize(m * (m - 1) / 2);
}

std::size_t BracketTable::slot(std::size_t a, std::size_t b) const {
  // a < b; row-major over the strict upper triangle
  const std::size_t m = coords_.size();
  return a * (2 * m - a - 1) / 2 + (b - a - 1);
}

Polynomial BracketTable::at(std::size_t a, std::size_t b) const {
  if (a == b) return {};
  return a < b ? upper_[slot(a, b)] : -upper_[slot(b, a)];
}

Polynomial BracketTable::at(VarId u, VarId v) const {
  auto a = coords_.index_of(u), b = coords_.index_of(v);
  if (!a || !b) throw PreconditionError("coordinate outside the bracket table");
  return at(*a, *b);
}

void BracketTable::set(std::size_t a, std::size_t b, Polynomial value) {
  if (a == b) {
    if (!value.is_zero()) throw PreconditionError("diagonal bracket entries must vanish");
    return;
  }
  if (a < b) {
    upper_[slot(a, b)] = std::move(value);
  } else {
    upper_[slot(b, a)] = -value;
  }
}

void BracketTable::set(VarId u, VarId v, Polynomial value) {
  auto a = coords_.index_of(u), b = coords_.index_of(v);
  if (!a || !b) throw PreconditionError("coordinate outside the bracket table");
  set(*a, *b, std::move(value));
}

BracketTable operator+(const BracketTable& p, const BracketTable& q) {
  if (!(p.coords_ == q.coords_)) throw PreconditionError("bracket tables over different coordinates");
  BracketTable out(p.coords_);
  for (std::size_t s = 0; s < p.upper_.size(); ++s) out.upper_[s] = p.upper_[s] + q.upper_[s];
  return out;
}

BracketTable operator*(const Polynomial& s, const BracketTable& p) {
  BracketTable out(p.coords_);
  for (std::size_t k = 0; k < p.upper_.size(); ++k) out.upper_[k] = s * p.upper_[k];
  return out;
}

// ---------------------------------------------------------------------------

VectorFieldX::VectorFieldX(CoordSet coords) : coords_(std::move(coords)), comps_(coords_.size()) {}

const Polynomial& VectorFieldX::at(VarId u) const {
  auto a = coords_.index_of(u);
  if (!a) throw PreconditionError("coordinate outside the vector field's coordinates");
  return comps_[*a];
}

void VectorFieldX::set(VarId u, Polynomial value) {
  auto a = coords_.index_of(u);
  if (!a) throw PreconditionError("coordinate outside the vector field's coordinates");
  comps_[*a] = std::move(value);
}

Polynomial VectorFieldX::apply(const Polynomial& f) const {
  PolyBuilder sum;
  for (VarId v : f.variables()) {
    if (!v.is_coordinate()) continue;
    auto a = coords_.index_of(v);
    if (!a) throw PreconditionError("function involves " + v.name() + ", not a coordinate here");
    if (!comps_[*a].is_zero()) sum.add_product(comps_[*a], partial(f, v));
  }
  return sum.build();
}

bool VectorFieldX::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

Polynomial coordinate(int i, int j) { return Polynomial::variable(VarId::coord(i, j)); }

Polynomial trace_polynomial(int n) {
  PolyBuilder sum;
  for (int k = 1; k <= n; ++k) sum.add(coordinate(k, k));
  return sum.build();
}

BracketTable linear_bracket(int n) {
  BracketTable t(CoordSet::full(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (std::make_pair(i, j) >= std::make_pair(k, l)) continue;
          Polynomial v;
          if (j == k) v += coordinate(i, l);
          if (l == i) v -= coordinate(k, j);
          t.set(VarId::coord(i, j), VarId::coord(k, l), std::move(v));
        }
  return t;
}

Polynomial hamiltonian_H(const Tensor4& c, const Tensor4& b) {
  if (c.dim() != b.dim()) throw PreconditionError("c and b have different N");
  const std::vector<Polynomial> m = contract_last_pair(c);
  const int n = c.dim();
  PolyBuilder h;
  for (const auto& [idx, v] : b.entries()) {
    // b_{klnm} S_mn S_lk
    h.add_product(v, coordinate(idx[3], idx[2]) * coordinate(idx[1], idx[0]));
  }
  for (const auto& [idx, v] : c.entries()) {
    // -1/2 c_{klnm} M_mn S_lk
    const Polynomial& mm = m[static_cast<std::size_t>((idx[3] - 1) * n + (idx[2] - 1))];
    if (mm.is_zero()) continue;
    h.add_product(v * coordinate(idx[1], idx[0]), mm, Rational(-1, 2));
  }
  return h.build();
}

VectorFieldX ham_vector_field(const Tensor4& c, const Tensor4& b) {
  if (c.dim() != b.dim()) throw PreconditionError("c and b have different N");
  const int n = c.dim();
  require_dim(n);
  auto at = [n](const std::vector<Polynomial>& v, int p, int q) -> const Polynomial& {
    return v[static_cast<std::size_t>((p - 1) * n + (q - 1))];
  };
  const std::vector<Polynomial> m = contract_last_pair(c);
  // A_ks = sum_{n,m} c_{ksnm} M_mn
  std::vector<PolyBuilder> a_acc(static_cast<std::size_t>(n * n));
  for (const auto& [idx, v] : c.entries()) {
    const Polynomial& mm = at(m, idx[3], idx[2]);
    if (!mm.is_zero()) a_acc[static_cast<std::size_t>((idx[0] - 1) * n + (idx[1] - 1))].add_product(v, mm);
  }
  std::vector<Polynomial> a;
  for (auto& acc : a_acc) a.push_back(acc.build());
  const std::vector<Polynomial> bm = contract_last_pair(b);

  VectorFieldX field(CoordSet::full(n));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      PolyBuilder comp;
      for (int s = 1; s <= n; ++s) {
        comp.add_product(at(a, k, s), coordinate(s, l), Rational(-1));
        comp.add_product(at(a, s, l), coordinate(k, s));
        comp.add_product(at(bm, k, s), coordinate(s, l), Rational(2));
        comp.add_product(at(bm, s, l), coordinate(k, s), Rational(-2));
      }
      field.set(VarId::coord(k, l), comp.build());
    }
  return field;
}

BracketTable quadratic_bracket(const Tensor4& c, const Tensor4& b, const Rational& lambda, unsigned jobs) {
  if (c.dim() != b.dim()) throw PreconditionError("c and b have different N");
  if (lambda == 0) throw PreconditionError("lambda must be nonzero");
  const int n = c.dim();
  require_dim(n);
  const std::vector<Polynomial> m = contract_last_pair(c);
  auto mat = [&](int p, int q) -> const Polynomial& { return m[static_cast<std::size_t>((p - 1) * n + (q - 1))]; };
  const Polynomial s0 = Polynomial::variable(VarId::s0());

  BracketTable t(CoordSet::full(n), lambda);
  const std::size_t nn = static_cast<std::size_t>(n * n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < nn; ++p)
    for (std::size_t q = p + 1; q < nn; ++q) pairs.emplace_back(p, q);
  std::vector<Polynomial> values(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t w) {
    const int i = static_cast<int>(pairs[w].first) / n + 1, j = static_cast<int>(pairs[w].first) % n + 1;
    const int k = static_cast<int>(pairs[w].second) / n + 1, l = static_cast<int>(pairs[w].second) % n + 1;
    PolyBuilder e;
    if (j == k) e.add_product(s0, coordinate(i, l));
    if (l == i) e.add_product(s0, coordinate(k, j), Rational(-1));
    e.add_product(mat(k, j), coordinate(i, l));
    e.add_product(mat(i, l), coordinate(k, j), Rational(-1));
    for (int s = 1; s <= n; ++s)
      for (int tt = 1; tt <= n; ++tt) {
        const Polynomial& c1 = c.at(i, s, k, tt);
        if (!c1.is_zero()) e.add_product(c1, coordinate(s, j) * coordinate(tt, l));
        const Polynomial& c2 = c.at(s, j, tt, l);
        if (!c2.is_zero()) e.add_product(c2, coordinate(i, s) * coordinate(k, tt), Rational(-1));
      }
    values[w] = e.build();
  });
  for (std::size_t w = 0; w < pairs.size(); ++w) t.set(pairs[w].first, pairs[w].second, std::move(values[w]));

  const VectorFieldX v = ham_vector_field(c, b);
  const std::size_t s0_pos = t.coords().size() - 1;
  for (std::size_t p = 0; p < nn; ++p) t.set(s0_pos, p, Polynomial(lambda) * v.at(p));
  return t;
}

// ---------------------------------------------------------------------------

Polynomial restrict_poly(const Polynomial& p, int n) {
  const VarId last = VarId::coord(n, n);
  if (!p.mentions(last)) return p;
  PolyBuilder minus_trace;
  for (int i = 1; i < n; ++i) minus_trace.add(coordinate(i, i), Rational(-1));
  return substitute(p, last, minus_trace.build());
}

BracketTable restrict_sl(const BracketTable& t) {
  if (t.is_restricted()) return t;
  const int n = t.dim();
  BracketTable out(CoordSet::restricted(n), t.lambda());
  const auto& members = out.coords().members();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      out.set(a, b, restrict_poly(t.at(members[a], members[b]), n));
  return out;
}

VectorFieldX restrict_sl(const VectorFieldX& x) {
  if (x.coords().is_restricted()) return x;
  const int n = x.coords().dim();
  VectorFieldX out(CoordSet::restricted(n));
  for (VarId u : out.coords().members()) out.set(u, restrict_poly(x.at(u), n));
  return out;
}

namespace {

std::vector<std::pair<std::size_t, Polynomial>> gradient(const CoordSet& coords, const Polynomial& f) {
  std::vector<std::pair<std::size_t, Polynomial>> g;
  for (VarId v : f.variables()) {
    if (!v.is_coordinate()) continue;
    auto a = coords.index_of(v);
    if (!a) throw PreconditionError("function involves " + v.name() + ", which is not a coordinate of the table");
    g.emplace_back(*a, partial(f, v));
  }
  return g;
}

}  // namespace

Polynomial bracket_of(const BracketTable& t, const Polynomial& f, const Polynomial& g) {
  const auto df = gradient(t.coords(), f);
  const auto dg = gradient(t.coords(), g);
  PolyBuilder sum;
  for (const auto& [a, fa] : df)
    for (const auto& [b, gb] : dg) {
      if (a == b) continue;
      const Polynomial& e = a < b ? t.upper(a, b) : t.upper(b, a);
      if (e.is_zero()) continue;
      sum.add_product(e, fa * gb, Rational(a < b ? 1 : -1));
    }
  return sum.build();
}

Polynomial bracket_with_coordinate(const BracketTable& t, const Polynomial& f, std::size_t w) {
  PolyBuilder sum;
  for (const auto& [a, fa] : gradient(t.coords(), f)) {
    if (a == w) continue;
    const Polynomial& e = a < w ? t.upper(a, w) : t.upper(w, a);
    if (e.is_zero()) continue;
    sum.add_product(e, fa, Rational(a < w ? 1 : -1));
  }
  return sum.build();
}

}  // namespace bipoisson

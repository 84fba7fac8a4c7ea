#include "bipoisson/tensor.hpp"

#include <string>

#include "bipoisson/errors.hpp"

namespace bipoisson {

namespace {

const Polynomial kZero;

Index4 index4(int i, int j, int k, int l) {
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(k),
          static_cast<std::uint8_t>(l)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Tensor4

Tensor4::Tensor4(int n) : n_(n) {
  if (n < 1 || n > VarId::kMaxDim) throw PreconditionError("tensor dimension out of range: " + std::to_string(n));
}

void Tensor4::check(int i, int j, int k, int l) const {
  auto ok = [this](int x) { return x >= 1 && x <= n_; };
  if (!ok(i) || !ok(j) || !ok(k) || !ok(l)) {
    throw std::out_of_range("tensor index " + format_index(index4(i, j, k, l)) + " outside 1.." +
                            std::to_string(n_));
  }
}

const Polynomial& Tensor4::at(int i, int j, int k, int l) const {
  check(i, j, k, l);
  return at(index4(i, j, k, l));
}

const Polynomial& Tensor4::at(const Index4& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? kZero : it->second;
}

void Tensor4::set(int i, int j, int k, int l, Polynomial value) {
  check(i, j, k, l);
  if (value.is_zero()) {
    entries_.erase(index4(i, j, k, l));
  } else {
    entries_[index4(i, j, k, l)] = std::move(value);
  }
}

void Tensor4::add(int i, int j, int k, int l, const Polynomial& value) {
  if (value.is_zero()) return;
  check(i, j, k, l);
  auto idx = index4(i, j, k, l);
  auto it = entries_.find(idx);
  if (it == entries_.end()) {
    entries_.emplace(idx, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

Tensor4 Tensor4::pair_swapped() const {
  Tensor4 out(n_);
  for (const auto& [idx, v] : entries_) out.entries_.emplace(Index4{idx[2], idx[3], idx[0], idx[1]}, v);
  return out;
}

Tensor4 Tensor4::substitute(VarId v, const Polynomial& r) const {
  Tensor4 out(n_);
  for (const auto& [idx, p] : entries_) out.set(idx[0], idx[1], idx[2], idx[3], bipoisson::substitute(p, v, r));
  return out;
}

Tensor4 Tensor4::eval_partial(const Assignment& assignment) const {
  Tensor4 out(n_);
  for (const auto& [idx, p] : entries_) out.set(idx[0], idx[1], idx[2], idx[3], bipoisson::eval_partial(p, assignment));
  return out;
}

Tensor4& Tensor4::operator+=(const Tensor4& other) {
  if (other.n_ != n_) throw PreconditionError("tensor dimension mismatch");
  for (const auto& [idx, v] : other.entries_) add(idx[0], idx[1], idx[2], idx[3], v);
  return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& other) {
  if (other.n_ != n_) throw PreconditionError("tensor dimension mismatch");
  for (const auto& [idx, v] : other.entries_) add(idx[0], idx[1], idx[2], idx[3], -v);
  return *this;
}

Tensor4& Tensor4::operator*=(const Polynomial& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= s;
    it = it->second.is_zero() ? entries_.erase(it) : std::next(it);
  }
  return *this;
}

std::vector<Polynomial> Tensor4::dense() const {
  std::vector<Polynomial> out(static_cast<std::size_t>(n_ * n_ * n_ * n_));
  for (const auto& [idx, v] : entries_) {
    out[static_cast<std::size_t>((((idx[0] - 1) * n_ + (idx[1] - 1)) * n_ + (idx[2] - 1)) * n_ + (idx[3] - 1))] = v;
  }
  return out;
}

namespace {

Tensor4 make_paired(int n, std::initializer_list<std::pair<Index4, Polynomial>> listed, int partner_sign) {
  Tensor4 t(n);
  for (const auto& [idx, v] : listed) {
    t.add(idx[0], idx[1], idx[2], idx[3], v);
    if (partner_sign > 0) {
      if (Index4{idx[2], idx[3], idx[0], idx[1]} != idx) t.add(idx[2], idx[3], idx[0], idx[1], v);
    } else {
      t.add(idx[2], idx[3], idx[0], idx[1], -v);
    }
  }
  return t;
}

}  // namespace

Tensor4 make_skew(int n, std::initializer_list<std::pair<Index4, Polynomial>> listed) {
  return make_paired(n, listed, -1);
}

Tensor4 make_sym(int n, std::initializer_list<std::pair<Index4, Polynomial>> listed) {
  return make_paired(n, listed, +1);
}

// ---------------------------------------------------------------------------
// MatrixX

MatrixX MatrixX::identity(int n) {
  MatrixX m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixX MatrixX::unit(int n, int i, int j) {
  MatrixX m(n);
  m.at(i, j) = 1;
  return m;
}

Rational MatrixX::trace() const {
  Rational t = 0;
  for (int i = 1; i <= n_; ++i) t += at(i, i);
  return t;
}

MatrixX operator+(const MatrixX& a, const MatrixX& b) {
  MatrixX out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

MatrixX operator-(const MatrixX& a, const MatrixX& b) {
  MatrixX out(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

MatrixX operator*(const MatrixX& a, const MatrixX& b) {
  MatrixX out(a.n_);
  for (int i = 1; i <= a.n_; ++i) {
    for (int k = 1; k <= a.n_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 1; j <= a.n_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

MatrixX operator*(const Rational& s, MatrixX a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

MatrixX project_pN(const MatrixX& m) {
  if (m.dim() < 2) throw PreconditionError("project_pN needs N >= 2");
  Rational shift = m.trace() / m.dim();
  MatrixX out = m;
  for (int i = 1; i <= m.dim(); ++i) out.at(i, i) -= shift;
  return out;
}

Tensor4 omega(int n) {
  if (n < 2) throw PreconditionError("omega needs N >= 2");
  Tensor4 t(n);
  Rational inv(1, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // delta_jk delta_il: the (i,j,j,i) entries.
      t.add(i, j, j, i, Polynomial(1));
    }
    for (int k = 1; k <= n; ++k) t.add(i, i, k, k, Polynomial(-inv));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

Report pair_symmetry(const Tensor4& t, int sign, const char* name) {
  Report r;
  r.identity = name;
  const int n = t.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
          ++r.checked;
          Polynomial d = sign > 0 ? t.at(i, j, k, l) - t.at(k, l, i, j) : t.at(i, j, k, l) + t.at(k, l, i, j);
          if (!d.is_zero()) {
            r.fail(format_index(index4(i, j, k, l)), std::move(d));
          }
        }
  return r;
}

Report partial_traces(const Tensor4& t, bool first_slot) {
  Report r;
  r.identity = first_slot ? "trace-first-slot" : "trace-second-slot";
  const int n = t.dim();
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      PolyBuilder sum;
      for (int s = 1; s <= n; ++s) sum.add(first_slot ? t.at(s, s, p, q) : t.at(p, q, s, s));
      ++r.checked;
      Polynomial total = sum.build();
      if (!total.is_zero()) {
        r.fail(first_slot ? "(*,*," + std::to_string(p) + "," + std::to_string(q) + ")"
                          : "(" + std::to_string(p) + "," + std::to_string(q) + ",*,*)",
               std::move(total));
      }
    }
  return r;
}

Report validate(const Tensor4& t, int sign, const char* name, const char* symmetry) {
  Report r;
  r.identity = name;
  ReportTimer timer(r);
  r.add_child(pair_symmetry(t, sign, symmetry));
  r.add_child(partial_traces(t, true));
  r.add_child(partial_traces(t, false));
  return r;
}

}  // namespace

Report validate_c(const Tensor4& c) { return validate(c, -1, "validate-c", "skew"); }

Report validate_b(const Tensor4& b) { return validate(b, +1, "validate-b", "symmetric"); }

// ---------------------------------------------------------------------------
// Residual6

const Polynomial& Residual6::at(const Index6& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? kZero : it->second;
}

std::optional<std::pair<Index6, Polynomial>> Residual6::first() const {
  if (entries_.empty()) return std::nullopt;
  return *entries_.begin();
}

bool Residual6::cyclic_invariant() const {
  for (const auto& [idx, v] : entries_) {
    Index6 rotated{idx[2], idx[3], idx[4], idx[5], idx[0], idx[1]};
    if (!(at(rotated) == v)) return false;
  }
  return true;
}

void Residual6::set(const Index6& idx, Polynomial value) {
  if (value.is_zero()) {
    entries_.erase(idx);
  } else {
    entries_[idx] = std::move(value);
  }
}

std::string format_index(const Index4& idx) {
  return "(" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," + std::to_string(idx[2]) + "," +
         std::to_string(idx[3]) + ")";
}

std::string format_index(const Index6& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

}  // namespace bipoisson

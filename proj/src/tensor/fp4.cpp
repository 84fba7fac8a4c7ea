#include <string>

#include "bipoisson/errors.hpp"
#include "bipoisson/parallel.hpp"
#include "bipoisson/tensor.hpp"

namespace bipoisson {

namespace {

// Dense view of a tensor with a "nonzero" flag per slot so the inner sums
// can skip the (many) empty entries cheaply.
struct Dense4 {
  int n;
  std::vector<Polynomial> v;
  std::vector<char> nz;

  explicit Dense4(const Tensor4& t) : n(t.dim()), v(t.dense()), nz(v.size()) {
    for (std::size_t i = 0; i < v.size(); ++i) nz[i] = !v[i].is_zero();
  }
  std::size_t idx(int i, int j, int k, int l) const {
    return static_cast<std::size_t>((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1));
  }
  const Polynomial& at(int i, int j, int k, int l) const { return v[idx(i, j, k, l)]; }
  bool has(int i, int j, int k, int l) const { return nz[idx(i, j, k, l)]; }
};

}  // namespace

Residual6 fp4_residual(const Tensor4& c, const Tensor4& b, unsigned jobs) {
  if (c.dim() != b.dim()) {
    throw PreconditionError("fp4: c has N=" + std::to_string(c.dim()) + " but b has N=" + std::to_string(b.dim()));
  }
  const int n = c.dim();
  const Dense4 C(c);
  const Dense4 B(b);
  const Rational inv_n(1, n);

  // Q_{abcd} = sum_{r,s} c_{abrs} c_{srcd}
  std::vector<Polynomial> q(C.v.size());
  parallel_for(C.v.size(), jobs, [&](std::size_t flat) {
    int d = static_cast<int>(flat % n) + 1;
    int cc = static_cast<int>(flat / n % n) + 1;
    int bb = static_cast<int>(flat / n / n % n) + 1;
    int a = static_cast<int>(flat / n / n / n) + 1;
    PolyBuilder sum;
    for (int r = 1; r <= n; ++r)
      for (int s = 1; s <= n; ++s)
        if (C.has(a, bb, r, s) && C.has(s, r, cc, d)) sum.add_product(C.at(a, bb, r, s), C.at(s, r, cc, d));
    q[flat] = sum.build();
  });
  auto Q = [&](int a, int bb, int cc, int d) -> const Polynomial& { return q[C.idx(a, bb, cc, d)]; };

  const std::size_t n6 = static_cast<std::size_t>(n) * n * n * n * n * n;
  std::vector<Polynomial> out(n6);
  parallel_for(n6, jobs, [&](std::size_t flat) {
    int idx[6];
    std::size_t rest = flat;
    for (int p = 5; p >= 0; --p) {
      idx[p] = static_cast<int>(rest % n) + 1;
      rest /= n;
    }
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4], nn = idx[5];
    PolyBuilder sum;
    for (int r = 1; r <= n; ++r) {
      if (C.has(k, l, i, r) && C.has(r, j, m, nn)) sum.add_product(C.at(k, l, i, r), C.at(r, j, m, nn));
      if (C.has(i, j, m, r) && C.has(r, nn, k, l)) sum.add_product(C.at(i, j, m, r), C.at(r, nn, k, l));
      if (C.has(m, nn, k, r) && C.has(r, l, i, j)) sum.add_product(C.at(m, nn, k, r), C.at(r, l, i, j));
    }
    const Rational minus_inv = -inv_n;
    if (i == j) sum.add(Q(k, l, m, nn), minus_inv);
    if (m == nn) sum.add(Q(i, j, k, l), minus_inv);
    if (k == l) sum.add(Q(m, nn, i, j), minus_inv);

    if (k == nn) sum.add(B.at(m, l, i, j), Rational(-1));
    if (m == j) sum.add(B.at(i, nn, k, l), Rational(-1));
    if (i == l) sum.add(B.at(k, j, m, nn), Rational(-1));

    if (m == nn) {
      sum.add(B.at(i, j, k, l), inv_n);
      sum.add(B.at(k, l, i, j), inv_n);
    }
    if (i == j) {
      sum.add(B.at(k, l, m, nn), inv_n);
      sum.add(B.at(m, nn, k, l), inv_n);
    }
    if (k == l) {
      sum.add(B.at(m, nn, i, j), inv_n);
      sum.add(B.at(i, j, m, nn), inv_n);
    }
    out[flat] = sum.build();
  });

  Residual6 res(n);
  for (std::size_t flat = 0; flat < n6; ++flat) {
    if (out[flat].is_zero()) continue;
    Index6 idx;
    std::size_t rest = flat;
    for (int p = 5; p >= 0; --p) {
      idx[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(rest % n + 1);
      rest /= n;
    }
    res.set(idx, std::move(out[flat]));
  }
  return res;
}

}  // namespace bipoisson

#include "bipoisson/errors.hpp"
#include "bipoisson/tensor.hpp"

namespace bipoisson {

namespace {

void require_same_dim(const MatrixX& x, const Tensor4& t) {
  if (x.dim() != t.dim()) throw PreconditionError("gauge generator and tensor have different N");
}

}  // namespace

// ((ad_X (x) Id) T)_{pqkl} = sum_i X_pi T_{iqkl} - sum_j T_{pjkl} X_jq
Tensor4 ad_first(const MatrixX& x, const Tensor4& t) {
  require_same_dim(x, t);
  const int n = t.dim();
  Tensor4 out(n);
  for (const auto& [idx, v] : t.entries()) {
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    for (int p = 1; p <= n; ++p)
      if (x.at(p, i) != 0) out.add(p, j, k, l, v * x.at(p, i));
    for (int q = 1; q <= n; ++q)
      if (x.at(j, q) != 0) out.add(i, q, k, l, v * Rational(-x.at(j, q)));
  }
  return out;
}

Tensor4 ad_second(const MatrixX& x, const Tensor4& t) {
  return ad_first(x, t.pair_swapped()).pair_swapped();
}

GaugeResult gauge_transform(const Tensor4& c, const Tensor4& b, const MatrixX& x) {
  if (c.dim() != b.dim()) throw PreconditionError("c and b have different N");
  require_same_dim(x, c);
  if (x.trace() != 0) throw PreconditionError("gauge generator is not traceless (trace " + to_string(x.trace()) + ")");
  const Tensor4 om = omega(c.dim());
  const Tensor4 ad_om = ad_first(x, om);
  Tensor4 c2 = c + ad_om;
  Tensor4 b2 = b + Polynomial(Rational(1, 2)) * ad_first(x, ad_om) + ad_first(x, c);
  Report cc = validate_c(c2);
  Report bc = validate_b(b2);
  return GaugeResult{std::move(c2), std::move(b2), std::move(cc), std::move(bc)};
}

}  // namespace bipoisson

#include "bipoisson/schouten.hpp"

#include "bipoisson/errors.hpp"
#include "bipoisson/parallel.hpp"

namespace bipoisson {

namespace {

// f d_a
struct SimpleField {
  std::size_t a;
  Polynomial f;
};

struct Term3 {
  std::size_t a, b, c;
  Polynomial f;
};

// [f d_a, g d_b] = f (d_a g) d_b - g (d_b f) d_a
void commutator(const CoordSet& coords, const SimpleField& x, const SimpleField& y, std::vector<SimpleField>& out) {
  const auto& m = coords.members();
  Polynomial dg = partial(y.f, m[x.a]);
  if (!dg.is_zero()) out.push_back({y.a, x.f * dg});
  Polynomial df = partial(x.f, m[y.a]);
  if (!df.is_zero()) out.push_back({x.a, -(y.f * df)});
}

}  // namespace

Trilinear schouten_bivectors(const BracketTable& p, const BracketTable& q, unsigned jobs) {
  if (!(p.coords() == q.coords())) throw PreconditionError("bivectors over different coordinates");
  const CoordSet& coords = p.coords();
  const std::size_t m = coords.size();

  auto factors = [&](const BracketTable& t) {
    std::vector<std::array<SimpleField, 2>> out;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (!t.upper(a, b).is_zero()) out.push_back({SimpleField{a, t.upper(a, b)}, SimpleField{b, Polynomial(1)}});
    return out;
  };
  const auto xs = factors(p);
  const auto ys = factors(q);

  std::vector<std::vector<Term3>> partial_terms(xs.size());
  parallel_for(xs.size(), jobs, [&](std::size_t w) {
    const auto& x = xs[w];
    std::vector<SimpleField> br;
    for (const auto& y : ys)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          br.clear();
          commutator(coords, x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], br);
          const SimpleField& xr = x[static_cast<std::size_t>(1 - i)];
          const SimpleField& yr = y[static_cast<std::size_t>(1 - j)];
          const int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{(i+1)+(j+1)}
          for (const auto& z : br) {
            if (z.a == xr.a || z.a == yr.a || xr.a == yr.a) continue;
            partial_terms[w].push_back({z.a, xr.a, yr.a, Rational(sign) * (z.f * xr.f * yr.f)});
          }
        }
  });

  std::map<std::array<std::size_t, 3>, PolyBuilder> acc;
  for (auto& list : partial_terms)
    for (auto& term : list) {
      std::array<std::size_t, 3> k{term.a, term.b, term.c};
      int sign = 1;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t i = 0; i + 1 < 3; ++i)
          if (k[i] > k[i + 1]) {
            std::swap(k[i], k[i + 1]);
            sign = -sign;
          }
      acc[k].add(term.f, Rational(sign));
    }
  Trilinear out(coords);
  for (auto& [k, b] : acc) out.set(k[0], k[1], k[2], b.build());
  return out;
}

Polynomial pairing(const Trilinear& t, const Polynomial& f1, const Polynomial& f2, const Polynomial& f3) {
  const auto& m = t.coords().members();
  PolyBuilder sum;
  for (const auto& [k, v] : t.entries()) {
    Polynomial d[3][3];
    const Polynomial* f[3] = {&f1, &f2, &f3};
    for (int r = 0; r < 3; ++r)
      for (int s = 0; s < 3; ++s) d[r][s] = partial(*f[r], m[k[static_cast<std::size_t>(s)]]);
    Polynomial det = d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
                     d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
                     d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
    if (!det.is_zero()) sum.add_product(v, det);
  }
  return sum.build();
}

}  // namespace bipoisson

#include "bipoisson/trilinear.hpp"

#include <algorithm>

#include "bipoisson/errors.hpp"
#include "bipoisson/parallel.hpp"

namespace bipoisson {

Polynomial Trilinear::at(std::size_t a, std::size_t b, std::size_t c) const {
  if (a == b || b == c || a == c) return {};
  std::array<std::size_t, 3> k{a, b, c};
  int sign = 1;
  // bubble sort on three elements, counting transpositions
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (k[i] > k[i + 1]) {
        std::swap(k[i], k[i + 1]);
        sign = -sign;
      }
  auto it = values_.find(k);
  if (it == values_.end()) return {};
  return sign > 0 ? it->second : -it->second;
}

void Trilinear::set(std::size_t a, std::size_t b, std::size_t c, Polynomial value) {
  if (!(a < b && b < c)) throw PreconditionError("trilinear entries are stored on increasing triples");
  if (value.is_zero()) {
    values_.erase({a, b, c});
  } else {
    values_[{a, b, c}] = std::move(value);
  }
}

void Trilinear::add(std::size_t a, std::size_t b, std::size_t c, const Polynomial& value) {
  if (value.is_zero()) return;
  set(a, b, c, at(a, b, c) + value);
}

Trilinear& Trilinear::operator+=(const Trilinear& o) {
  if (!(coords_ == o.coords_)) throw PreconditionError("trilinear forms over different coordinates");
  for (const auto& [k, v] : o.values_) add(k[0], k[1], k[2], v);
  return *this;
}

Trilinear& Trilinear::operator-=(const Trilinear& o) {
  if (!(coords_ == o.coords_)) throw PreconditionError("trilinear forms over different coordinates");
  for (const auto& [k, v] : o.values_) add(k[0], k[1], k[2], -v);
  return *this;
}

Trilinear& Trilinear::operator*=(const Rational& s) {
  if (s == 0) {
    values_.clear();
    return *this;
  }
  for (auto& [k, v] : values_) v *= s;
  return *this;
}

Polynomial jacobiator(const BracketTable& t, const Polynomial& f1, const Polynomial& f2, const Polynomial& f3) {
  PolyBuilder sum;
  sum.add(bracket_of(t, bracket_of(t, f1, f2), f3));
  sum.add(bracket_of(t, bracket_of(t, f3, f1), f2));
  sum.add(bracket_of(t, bracket_of(t, f2, f3), f1));
  return sum.build();
}

namespace {

// sum_cyc {{u_a, u_b}, u_c} on coordinates.
Polynomial coordinate_jacobiator(const BracketTable& t, std::size_t a, std::size_t b, std::size_t c) {
  PolyBuilder sum;
  sum.add(bracket_with_coordinate(t, t.at(a, b), c));
  sum.add(bracket_with_coordinate(t, t.at(c, a), b));
  sum.add(bracket_with_coordinate(t, t.at(b, c), a));
  return sum.build();
}

}  // namespace

Trilinear jacobi_form(const BracketTable& t, unsigned jobs) {
  const std::size_t m = t.coords().size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) triples.push_back({a, b, c});
  std::vector<Polynomial> values(triples.size());
  parallel_for(triples.size(), jobs, [&](std::size_t w) {
    values[w] = Rational(-2) * coordinate_jacobiator(t, triples[w][0], triples[w][1], triples[w][2]);
  });
  Trilinear out(t.coords());
  for (std::size_t w = 0; w < triples.size(); ++w) out.set(triples[w][0], triples[w][1], triples[w][2], std::move(values[w]));
  return out;
}

Trilinear polarized_form(const BracketTable& a, const BracketTable& b, unsigned jobs) {
  Trilinear out = jacobi_form(a + b, jobs) - jacobi_form(a, jobs) - jacobi_form(b, jobs);
  return Rational(1, 2) * std::move(out);
}

Trilinear wedge_form(const VectorFieldX& x, const BracketTable& p) {
  if (!(x.coords() == p.coords())) throw PreconditionError("vector field and bivector over different coordinates");
  const std::size_t m = p.coords().size();
  Trilinear out(p.coords());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        PolyBuilder sum;
        sum.add_product(x.at(a), p.upper(b, c));
        sum.add_product(x.at(b), p.at(c, a));
        sum.add_product(x.at(c), p.upper(a, b));
        out.set(a, b, c, sum.build());
      }
  return out;
}

std::string triple_name(const CoordSet& coords, std::size_t a, std::size_t b, std::size_t c) {
  const auto& m = coords.members();
  return "(" + m[a].name() + ", " + m[b].name() + ", " + m[c].name() + ")";
}

}  // namespace bipoisson

#include "bipoisson/verify.hpp"

#include <array>

#include "bipoisson/errors.hpp"
#include "bipoisson/parallel.hpp"
#include "bipoisson/schouten.hpp"

namespace bipoisson {

namespace {

Polynomial coordinate_jacobiator(const BracketTable& t, std::size_t a, std::size_t b, std::size_t c) {
  PolyBuilder sum;
  sum.add(bracket_with_coordinate(t, t.at(a, b), c));
  sum.add(bracket_with_coordinate(t, t.at(c, a), b));
  sum.add(bracket_with_coordinate(t, t.at(b, c), a));
  return sum.build();
}

Report compare_forms(std::string identity, const Trilinear& lhs, const Trilinear& rhs) {
  Report r;
  r.identity = std::move(identity);
  const std::size_t m = lhs.coords().size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        ++r.checked;
        Polynomial d = lhs.at(a, b, c) - rhs.at(a, b, c);
        if (!d.is_zero()) r.fail(triple_name(lhs.coords(), a, b, c), std::move(d));
      }
  return r;
}

BracketTable linear_like(const BracketTable& t) {
  return t.is_restricted() ? restrict_sl(linear_bracket(t.dim())) : linear_bracket(t.dim());
}

}  // namespace

Report jacobi_check(const BracketTable& t, unsigned jobs) {
  Report r;
  r.identity = "jacobi";
  ReportTimer timer(r);
  const std::size_t m = t.coords().size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) triples.push_back({a, b, c});
  std::vector<Polynomial> values(triples.size());
  parallel_for(triples.size(), jobs,
               [&](std::size_t w) { values[w] = coordinate_jacobiator(t, triples[w][0], triples[w][1], triples[w][2]); });
  std::size_t bad = 0;
  for (std::size_t w = 0; w < triples.size(); ++w) {
    ++r.checked;
    if (!values[w].is_zero()) {
      ++bad;
      r.fail(triple_name(t.coords(), triples[w][0], triples[w][1], triples[w][2]), std::move(values[w]));
    }
  }
  if (bad) r.note = std::to_string(bad) + " of " + std::to_string(triples.size()) + " triples have a nonzero Jacobiator";
  return r;
}

Report compatibility_check(const BracketTable& t1, const BracketTable& t2, unsigned jobs) {
  if (!(t1.coords() == t2.coords())) throw PreconditionError("compatibility check needs tables over the same coordinates");
  Report r;
  r.identity = "compatibility";
  ReportTimer timer(r);
  Report pencil = jacobi_check(t1 + Polynomial::variable(VarId::pencil()) * t2, jobs);
  pencil.identity = "jacobi(t1 + lambda*t2)";
  r.add_child(std::move(pencil));
  return r;
}

Report schouten_factor_check(const BracketTable& t, unsigned jobs) {
  Report r;
  ReportTimer timer(r);
  r = compare_forms("schouten-factor", jacobi_form(t, jobs), schouten_bivectors(t, t, jobs));
  return r;
}

Report trace_casimir_check(const BracketTable& t) {
  if (t.is_restricted()) throw PreconditionError("the trace Casimir check runs on an unrestricted table");
  Report r;
  r.identity = "trace-casimir";
  ReportTimer timer(r);
  const Polynomial tr = trace_polynomial(t.dim());
  for (VarId u : t.coords().members()) {
    ++r.checked;
    Polynomial v = bracket_of(t, Polynomial::variable(u), tr);
    if (!v.is_zero()) r.fail("{" + u.name() + ", trace}", std::move(v));
  }
  return r;
}

Report s0_flow_check(const BracketTable& t, const Polynomial& h, S0FlowForm form) {
  if (!t.lambda()) throw PreconditionError("the S0-flow check needs a table with a lambda");
  Report r;
  r.identity = form == S0FlowForm::Opposite ? "s0-flow {S0,S}_2 + lambda*{H,S}_1 = 0"
                                             : "s0-flow {S,S0}_2 = lambda*{S,H}_1";
  ReportTimer timer(r);
  const BracketTable lin = linear_like(t);
  const Polynomial hh = t.is_restricted() ? restrict_poly(h, t.dim()) : h;
  const Polynomial s0 = Polynomial::variable(VarId::s0());
  const Rational sign = form == S0FlowForm::Opposite ? Rational(1) : Rational(-1);
  for (VarId u : t.coords().members()) {
    if (u == VarId::s0()) continue;
    ++r.checked;
    const Polynomial pu = Polynomial::variable(u);
    Polynomial res = bracket_of(t, s0, pu) + sign * (*t.lambda() * bracket_of(lin, hh, pu));
    if (!res.is_zero()) r.fail(u.name(), std::move(res));
  }
  return r;
}

PencilParts pencil_parts(const BracketTable& quadratic) {
  const BracketTable t = restrict_sl(quadratic);
  const CoordSet& coords = t.coords();
  const VarId s0 = VarId::s0();
  const std::size_t s0_pos = coords.size() - 1;
  PencilParts parts{BracketTable(coords), BracketTable(coords), VectorFieldX(coords)};
  for (std::size_t a = 0; a < s0_pos; ++a) {
    for (std::size_t b = a + 1; b < s0_pos; ++b) {
      const Polynomial& e = t.upper(a, b);
      if (e.degree_in(s0) > 1) throw PreconditionError("entry of degree > 1 in S0; not a quadratic pencil table");
      parts.pi.set(a, b, e.coefficient_of(s0, 0));
      parts.pi1.set(a, b, e.coefficient_of(s0, 1));
    }
    Polynomial row = t.at(s0_pos, a);
    if (row.mentions(s0)) throw PreconditionError("S0 row depends on S0; not a quadratic pencil table");
    parts.v.set(coords.members()[a], std::move(row));
  }
  return parts;
}

Report decomposition_check(const PencilParts& parts, unsigned jobs) {
  Report r;
  r.identity = "decomposition";
  ReportTimer timer(r);
  const CoordSet& coords = parts.pi.coords();

  {
    Trilinear rhs = wedge_form(parts.v, parts.pi1);
    r.add_child(compare_forms("[pi,pi] = 2 v^pi1", jacobi_form(parts.pi, jobs), Rational(2) * std::move(rhs)));
  }
  {
    Report lie;
    lie.identity = "[pi,v] = 0";
    const auto& m = coords.members();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        ++lie.checked;
        const Polynomial ua = Polynomial::variable(m[a]);
        const Polynomial ub = Polynomial::variable(m[b]);
        Polynomial d = parts.v.apply(parts.pi.upper(a, b)) - bracket_of(parts.pi, parts.v.at(a), ub) -
                       bracket_of(parts.pi, ua, parts.v.at(b));
        if (!d.is_zero()) lie.fail("(" + m[a].name() + ", " + m[b].name() + ")", std::move(d));
      }
    r.add_child(std::move(lie));
  }
  {
    Trilinear zero(coords);
    r.add_child(compare_forms("[pi,pi1] = 0", polarized_form(parts.pi, parts.pi1, jobs), zero));
  }
  return r;
}

namespace {

void require_solution(const Tensor4& c, const Tensor4& b, unsigned jobs) {
  Residual6 res = fp4_residual(c, b, jobs);
  if (!res.empty()) {
    auto first = res.first();
    throw PreconditionError("(c, b) does not satisfy the tensor equation: " + std::to_string(res.size()) +
                            " nonzero residual entries, first at " + format_index(first->first));
  }
}

}  // namespace

Report decomposition_check(const Tensor4& c, const Tensor4& b, const Rational& lambda, unsigned jobs) {
  require_solution(c, b, jobs);
  Report r = decomposition_check(pencil_parts(quadratic_bracket(c, b, lambda, jobs)), jobs);
  r.note = "lambda = " + to_string(lambda);
  return r;
}

Report eqbasic2_followup_check(const Tensor4& c, const Tensor4& b, const Rational& lambda, unsigned jobs) {
  if (c.dim() < 3) throw PreconditionError("the follow-up check needs N >= 3");
  Report d = decomposition_check(c, b, lambda, jobs);
  if (!d.children[0].passed || !d.children[2].passed) {
    throw PreconditionError("hypotheses [pi,pi] = 2 v^pi1 and [pi,pi1] = 0 do not both hold");
  }
  Report r;
  r.identity = "[pi,v] = 0 follows";
  r.elapsed = d.elapsed;
  r.add_child(std::move(d.children[1]));
  return r;
}

}  // namespace bipoisson

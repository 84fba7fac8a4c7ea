#include <doctest.h>

#include <random>

#include "bipoisson/bracket_io.hpp"
#include "bipoisson/brackets.hpp"
#include "bipoisson/errors.hpp"
#include "bipoisson/sl3.hpp"
#include "bipoisson/verify.hpp"
#include "oracles.hpp"

using namespace bipoisson;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }
Polynomial S(int i, int j) { return coordinate(i, j); }
const Polynomial kS0 = Polynomial::variable(VarId::s0());

std::vector<sl3::Pair> catalog_pairs() {
  std::vector<sl3::Pair> out;
  for (sl3::NormalForm f : sl3::kNormalForms) out.push_back(sl3::normal_form(f, sl3::Params::symbolic()));
  out.push_back(sl3::rmatrix_example_parts());
  return out;
}

// Homogeneous degree of every term in the coordinates (S0 included).
bool homogeneous_in_coordinates(const Polynomial& p, unsigned degree) {
  for (const Term& t : p.terms()) {
    unsigned d = 0;
    for (const VarPower& f : t.mono.factors())
      if (f.var.is_coordinate()) d += f.exp;
    if (d != degree) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("brackets") {
  TEST_CASE("coordinate sets") {
    CHECK(CoordSet::full(3).size() == 10);
    CHECK(CoordSet::restricted(3).size() == 9);
    CHECK_FALSE(CoordSet::restricted(3).contains(VarId::coord(3, 3)));
    CHECK(CoordSet::restricted(3).contains(VarId::s0()));
    CHECK_FALSE(CoordSet::full(3).contains(VarId::y(0)));
    CHECK_FALSE(CoordSet::full(2).contains(VarId::coord(1, 3)));
  }

  TEST_CASE("linear bracket") {
    BracketTable pi1 = linear_bracket(3);
    CHECK(pi1.at(VarId::coord(1, 2), VarId::coord(2, 1)) == S(1, 1) - S(2, 2));
    CHECK(pi1.at(VarId::coord(1, 2), VarId::coord(3, 1)) == -S(3, 2));
    for (VarId u : pi1.coords().members()) {
      CHECK(pi1.at(VarId::s0(), u).is_zero());
      CHECK(pi1.at(u, u).is_zero());
    }
    CHECK(bracket_of(pi1, S(1, 2), S(2, 1)) == S(1, 1) - S(2, 2));
  }

  TEST_CASE("Hamiltonian against direct contraction") {
    CHECK(hamiltonian_H(Tensor4(3), Tensor4(3)).is_zero());
    for (const sl3::Pair& p : catalog_pairs()) CHECK(hamiltonian_H(p.c, p.b) == oracle::hamiltonian(p.c, p.b));
    std::array<Polynomial, 10> y{};
    y[0] = 1;
    Tensor4 b = sl3::b_of_y(y);
    CHECK(hamiltonian_H(Tensor4(3), b) == oracle::hamiltonian(Tensor4(3), b));
    sl3::Pair a1 = sl3::normal_form(sl3::NormalForm::A1, {});
    CHECK(hamiltonian_H(a1.c, a1.b) == oracle::hamiltonian(a1.c, a1.b));
  }

  TEST_CASE("hamiltonian vector field is {H, S_kl}_1") {
    CHECK(ham_vector_field(Tensor4(3), Tensor4(3)).is_zero());
    BracketTable pi1 = linear_bracket(3);
    for (const sl3::Pair& p : catalog_pairs()) {
      VectorFieldX v = ham_vector_field(p.c, p.b);
      Polynomial h = hamiltonian_H(p.c, p.b);
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) CHECK(v.at(VarId::coord(k, l)) == bracket_of(pi1, h, S(k, l)));
      CHECK(v.at(VarId::s0()).is_zero());
      // Flow preserves the trace.
      CHECK(v.apply(trace_polynomial(3)).is_zero());
    }
    sl3::Pair a4 = sl3::normal_form(sl3::NormalForm::A4, {Polynomial(1), std::nullopt});
    Polynomial h = hamiltonian_H(a4.c, a4.b);
    CHECK(ham_vector_field(a4.c, a4.b).at(VarId::coord(1, 2)) == oracle::leibniz_bracket(pi1, h, S(1, 2)));
  }

  TEST_CASE("quadratic bracket, case a1") {
    sl3::Pair a1 = sl3::normal_form(sl3::NormalForm::A1, {});
    BracketTable t = quadratic_bracket(a1.c, a1.b, Rational(1, 3));
    Polynomial expect = P("6*S[1,1]^2 - 6*S[1,2]*S[2,1] - 6*S[1,3]*S[3,1] - 6*S[2,2]*S[3,3] + 6*S[2,3]*S[3,2]");
    CHECK(oracle::quadratic_entry(a1.c, 2, 1, 3, 1) == expect);
    CHECK(t.at(VarId::coord(2, 1), VarId::coord(3, 1)) == expect);
    CHECK(t.at(VarId::coord(3, 1), VarId::coord(2, 1)) == -expect);
    CHECK(*t.lambda() == Rational(1, 3));
  }

  TEST_CASE("quadratic bracket against direct summation") {
    for (const sl3::Pair& p : catalog_pairs()) {
      BracketTable t = quadratic_bracket(p.c, p.b, Rational(1, 3), 2);
      VectorFieldX v = ham_vector_field(p.c, p.b);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
              REQUIRE(t.at(VarId::coord(i, j), VarId::coord(k, l)) == oracle::quadratic_entry(p.c, i, j, k, l));
          CHECK(t.at(VarId::s0(), VarId::coord(i, j)) == Rational(1, 3) * v.at(VarId::coord(i, j)));
        }
    }
  }

  TEST_CASE("quadratic bracket with c = b = 0 is S0 times the linear one") {
    BracketTable t = quadratic_bracket(Tensor4(3), Tensor4(3), Rational(1));
    BracketTable lin = linear_bracket(3);
    for (VarId u : t.coords().members())
      for (VarId v : t.coords().members()) CHECK(t.at(u, v) == kS0 * lin.at(u, v));
    CHECK_THROWS_AS(quadratic_bracket(Tensor4(3), Tensor4(3), Rational(0)), PreconditionError);
    CHECK_THROWS_AS(quadratic_bracket(Tensor4(3), Tensor4(2), Rational(1)), PreconditionError);
  }

  TEST_CASE("antisymmetry and homogeneity") {
    for (const sl3::Pair& p : catalog_pairs()) {
      BracketTable t = quadratic_bracket(p.c, p.b, Rational(1, 3));
      BracketTable lin = linear_bracket(3);
      for (VarId u : t.coords().members())
        for (VarId v : t.coords().members()) {
          REQUIRE(t.at(u, v) == -t.at(v, u));
          if (u != VarId::s0() && v != VarId::s0()) {
            CHECK(homogeneous_in_coordinates(t.at(u, v), 2));
            CHECK(homogeneous_in_coordinates(lin.at(u, v), 1));
          }
        }
    }
  }

  TEST_CASE("trace Casimir before restriction") {
    for (const sl3::Pair& p : catalog_pairs()) {
      BracketTable t = quadratic_bracket(p.c, p.b, Rational(1, 3));
      CHECK(trace_casimir_check(t).passed);
    }
    // The trace is a Casimir for any skew c, solution or not.
    Tensor4 c = sl3::basis_c(0) + Polynomial(3) * sl3::basis_c(8);
    CHECK(trace_casimir_check(quadratic_bracket(c, Tensor4(3), Rational(1))).passed);
  }

  TEST_CASE("restriction") {
    BracketTable r = restrict_sl(linear_bracket(3));
    CHECK(r.is_restricted());
    CHECK(r.at(VarId::coord(1, 2), VarId::coord(2, 1)) == S(1, 1) - S(2, 2));
    CHECK(restrict_poly(S(3, 3), 3) == -S(1, 1) - S(2, 2));
    CHECK_THROWS_AS(r.at(VarId::coord(3, 3), VarId::coord(1, 2)), PreconditionError);
    CHECK_THROWS_AS(bracket_of(r, S(3, 3), S(1, 2)), PreconditionError);
  }

  TEST_CASE("restricted table agrees with the full one at trace-zero points") {
    std::mt19937_64 rng(41);
    sl3::Pair a1 = sl3::normal_form(sl3::NormalForm::A1, {});
    BracketTable full = quadratic_bracket(a1.c, a1.b, Rational(1, 3));
    BracketTable res = restrict_sl(full);
    for (int n = 0; n < 20; ++n) {
      Assignment point;
      for (VarId u : res.coords().members()) point[u] = oracle::random_rational(rng);
      point[VarId::coord(3, 3)] = -point[VarId::coord(1, 1)] - point[VarId::coord(2, 2)];
      for (VarId u : res.coords().members())
        for (VarId v : res.coords().members()) REQUIRE(eval(res.at(u, v), point) == eval(full.at(u, v), point));
      // Brackets of functions free of S_33 commute with restriction.
      Polynomial f = P("S[1,2]*S[2,1] - S[1,1]*S0"), g = P("S[2,3]^2 + S[1,1]*S[2,2]");
      CHECK(eval(bracket_of(res, f, g), point) == eval(bracket_of(full, f, g), point));
    }
  }

  TEST_CASE("bracket_of") {
    BracketTable pi1 = linear_bracket(3);
    Polynomial f = P("S[1,1]*S[2,2]");
    CHECK(bracket_of(pi1, f, S(1, 2)) == S(1, 1) * bracket_of(pi1, S(2, 2), S(1, 2)) +
                                             S(2, 2) * bracket_of(pi1, S(1, 1), S(1, 2)));
    CHECK(bracket_of(pi1, f, S(1, 2)) == oracle::leibniz_bracket(pi1, f, S(1, 2)));
    std::mt19937_64 rng(53);
    sl3::Pair c3 = sl3::normal_form(sl3::NormalForm::C3, sl3::Params::symbolic());
    BracketTable t = quadratic_bracket(c3.c, c3.b, Rational(1, 3));
    const auto& members = t.coords().members();
    std::vector<VarId> vars(members.begin(), members.end());
    vars.push_back(VarId::y(2));
    for (int n = 0; n < 20; ++n) {
      Polynomial g = oracle::random_poly(rng, vars, 3, 3);
      Polynomial h = oracle::random_poly(rng, vars, 3, 3);
      CHECK(bracket_of(t, g, g).is_zero());
      CHECK(bracket_of(t, g, h) == oracle::leibniz_bracket(t, g, h));
      CHECK(bracket_of(t, g, h) == -bracket_of(t, h, g));
    }
  }

  TEST_CASE("table JSON round trip") {
    sl3::Pair c3 = sl3::normal_form(sl3::NormalForm::C3, sl3::Params::symbolic());
    for (bool restrict : {false, true}) {
      BracketTable t = quadratic_bracket(c3.c, c3.b, Rational(1, 3));
      if (restrict) t = restrict_sl(t);
      auto doc = table_to_json(t);
      BracketTable back = table_from_json(nlohmann::json::parse(doc.dump()));
      CHECK(back == t);
      CHECK(table_to_json(back).dump() == doc.dump());
    }
    CHECK(table_to_json(linear_bracket(2))["lambda"].is_null());
    auto foreign = nlohmann::json::parse(
        R"({"N":3,"lambda":"1","restricted":true,"entries":[{"u":"S[1,2]","v":"S[2,1]","poly":"S[3,3]"}]})");
    CHECK_THROWS_AS(table_from_json(foreign), ParseError);
    auto twice = nlohmann::json::parse(
        R"({"N":2,"lambda":"1","restricted":false,"entries":[{"u":"S[1,2]","v":"S[2,1]","poly":"S[1,1]"},{"u":"S[2,1]","v":"S[1,2]","poly":"S[1,1]"}]})");
    CHECK_THROWS_AS(table_from_json(twice), ParseError);
    auto bad_poly = nlohmann::json::parse(
        R"({"N":2,"lambda":"1","restricted":false,"entries":[{"u":"S[1,2]","v":"S[2,1]","poly":"S[1,1]*"}]})");
    CHECK_THROWS_AS(table_from_json(bad_poly), ParseError);
  }
}

// Acceptance suite: one line per criterion, exact identities only.
//
//   acceptance [--criterion K] [--jobs N]
//
// Every residual is compared with the zero polynomial over Q; there is no
// numerical tolerance anywhere. Exit status is 0 iff every selected
// criterion passes.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "bipoisson/brackets.hpp"
#include "bipoisson/errors.hpp"
#include "bipoisson/sl3.hpp"
#include "bipoisson/verify.hpp"

using namespace bipoisson;

namespace {

constexpr const char* kTolerance = "exact: residual must be the zero polynomial over Q";

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void require(bool ok, std::string what) {
    if (!ok) passed = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(std::string what) { details.push_back("     " + std::move(what)); }
};

unsigned g_jobs = 1;

std::string witness_text(const Report& r) {
  if (!r.witness) return "no witness";
  std::string s = r.witness->residual.to_string();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return "witness " + r.witness->location + ": " + s;
}

std::vector<std::pair<std::string, sl3::Pair>> catalog_cases() {
  std::vector<std::pair<std::string, sl3::Pair>> out;
  for (sl3::NormalForm f : sl3::kNormalForms) out.emplace_back(sl3::key(f), sl3::normal_form(f, sl3::Params::symbolic()));
  return out;
}

sl3::Pair form(sl3::NormalForm f) { return sl3::normal_form(f, sl3::Params::symbolic()); }

BracketTable restricted_quadratic(const sl3::Pair& p, const Rational& lambda) {
  return restrict_sl(quadratic_bracket(p.c, p.b, lambda, g_jobs));
}

// ---------------------------------------------------------------------------

Outcome master_identity() {
  Outcome o;
  auto y = sl3::symbolic_y();
  Residual6 res = fp4_residual(sl3::c_of_y(y), sl3::b_of_y(y), g_jobs);
  o.require(res.empty(), "fp4(sum y_a c_a, b(y)) over 729 sextuples: " + std::to_string(res.size()) + " nonzero");
  return o;
}

Outcome normal_forms() {
  Outcome o;
  for (sl3::NormalForm f : sl3::kNormalForms) {
    sl3::Pair p = form(f);
    auto y = sl3::y_assignment(f, sl3::Params::symbolic());
    std::size_t n = fp4_residual(p.c, p.b, g_jobs).size();
    bool match = p.c == sl3::c_of_y(y) && p.b == sl3::b_of_y(y);
    o.require(n == 0 && match, sl3::key(f) + ": fp4 nonzero entries " + std::to_string(n) +
                                   (match ? ", matches (c(y), b(y))" : ", differs from (c(y), b(y))"));
  }
  return o;
}

// Certified value of lambda; computed once.
std::optional<Rational> g_lambda_star;

Outcome lambda_certification() {
  Outcome o;
  const std::vector<Rational> candidates = {Rational(1), Rational(1, 3)};
  const std::vector<sl3::NormalForm> forms = {sl3::NormalForm::A1, sl3::NormalForm::A4, sl3::NormalForm::C3};
  std::vector<Rational> certified;
  for (const Rational& lambda : candidates) {
    bool all = true;
    for (sl3::NormalForm f : forms) {
      Report r = jacobi_check(restricted_quadratic(form(f), lambda), g_jobs);
      all = all && r.passed;
      o.info("lambda = " + to_string(lambda) + ", " + sl3::key(f) + ": " +
             (r.passed ? "Jacobi holds on " + std::to_string(r.checked) + " triples" : r.note));
    }
    if (all) certified.push_back(lambda);
  }
  o.require(certified.size() == 1, std::to_string(certified.size()) + " candidate(s) certified");
  if (certified.size() == 1) {
    g_lambda_star = certified.front();
    o.info("lambda* = " + to_string(*g_lambda_star));
  }
  return o;
}

const Rational& lambda_star() {
  if (!g_lambda_star) {
    lambda_certification();
    if (!g_lambda_star) throw std::runtime_error("lambda could not be certified");
  }
  return *g_lambda_star;
}

Outcome poisson_property() {
  Outcome o;
  const Rational& lambda = lambda_star();
  auto cases = catalog_cases();
  cases.emplace_back("rmatrix-example", sl3::rmatrix_example_parts());
  for (const auto& [name, p] : cases) {
    Report r = jacobi_check(restricted_quadratic(p, lambda), g_jobs);
    o.require(r.passed, name + ": " + (r.passed ? "Jacobi holds" : witness_text(r)));
  }
  return o;
}

Outcome compatibility() {
  Outcome o;
  const Rational& lambda = lambda_star();
  const BracketTable lin = restrict_sl(linear_bracket(3));
  for (sl3::NormalForm f : {sl3::NormalForm::A1, sl3::NormalForm::A4, sl3::NormalForm::B1, sl3::NormalForm::C3}) {
    Report r = compatibility_check(lin, restricted_quadratic(form(f), lambda), g_jobs);
    o.require(r.passed, sl3::key(f) + ": pi1 + lambda' pi2 " + (r.passed ? "Poisson for symbolic lambda'" : witness_text(r)));
  }
  return o;
}

Outcome trace_casimir() {
  Outcome o;
  const Rational& lambda = lambda_star();
  for (const auto& [name, p] : catalog_cases()) {
    Report r = trace_casimir_check(quadratic_bracket(p.c, p.b, lambda, g_jobs));
    o.require(r.passed, name + ": {u, sum S_kk}_2 over " + std::to_string(r.checked) + " coordinates incl. S0");
  }
  return o;
}

Outcome s0_flow() {
  Outcome o;
  const Rational& lambda = lambda_star();
  bool same_all = true;
  for (const auto& [name, p] : catalog_cases()) {
    BracketTable t = quadratic_bracket(p.c, p.b, lambda, g_jobs);
    Polynomial h = hamiltonian_H(p.c, p.b);
    Report lit = s0_flow_check(t, h, S0FlowForm::Opposite);
    o.require(lit.passed, name + ": {S0,S_kl}_2 + lambda*{H,S_kl}_1 = 0: " + (lit.passed ? "holds" : witness_text(lit)));
    same_all = same_all && s0_flow_check(t, h, S0FlowForm::Same).passed;
  }
  o.info(std::string("with the opposite sign, {S0,S_kl}_2 = lambda*{H,S_kl}_1 holds for every case: ") +
         (same_all ? "yes" : "no"));
  return o;
}

Outcome schouten_factor() {
  Outcome o;
  sl3::Pair a1 = form(sl3::NormalForm::A1);
  PencilParts parts = pencil_parts(quadratic_bracket(a1.c, a1.b, lambda_star(), g_jobs));
  const std::pair<const char*, BracketTable> cases[] = {
      {"pi1", parts.pi1}, {"pi(a1)", parts.pi}, {"pi1 + pi(a1)", parts.pi1 + parts.pi}};
  for (const auto& [name, t] : cases) {
    Report r = schouten_factor_check(t, g_jobs);
    o.require(r.passed, std::string(name) + ": [P,P] = -2 Jacobiator on " + std::to_string(r.checked) + " triples");
  }
  return o;
}

Outcome decomposition() {
  Outcome o;
  const Rational& lambda = lambda_star();
  for (sl3::NormalForm f : {sl3::NormalForm::A1, sl3::NormalForm::A4}) {
    sl3::Pair p = form(f);
    Report r = decomposition_check(p.c, p.b, lambda, g_jobs);
    for (const Report& c : r.children) o.require(c.passed, sl3::key(f) + ": " + c.identity);
  }
  for (sl3::NormalForm f : {sl3::NormalForm::A1, sl3::NormalForm::A4, sl3::NormalForm::C3}) {
    sl3::Pair p = form(f);
    Report r = eqbasic2_followup_check(p.c, p.b, lambda, g_jobs);
    o.require(r.passed, sl3::key(f) + ": [pi,v] = 0 follows from the other two at N = 3");
  }
  return o;
}

Outcome rmatrix_example() {
  Outcome o;
  sl3::Pair ex = sl3::rmatrix_example_parts();
  Tensor4 claimed = Polynomial(Rational(1, 2)) * (sl3::basis_c(8) - sl3::basis_c(4));
  Tensor4 diff = ex.c - claimed;
  o.require(diff.is_zero(), "c_example = 1/2(-c4 + c8): " +
                                (diff.is_zero() ? std::string("exact")
                                                : std::to_string(diff.entries().size()) + " entries differ, first " +
                                                      format_index(diff.entries().begin()->first) + " = " +
                                                      diff.entries().begin()->second.to_string()));
  Tensor4 alt = Polynomial(Rational(-1, 2)) * (sl3::basis_c(4) + sl3::basis_c(8));
  o.info(std::string("c_example = -1/2(c4 + c8): ") + (ex.c == alt ? "exact" : "no"));
  std::size_t n = fp4_residual(ex.c, ex.b, g_jobs).size();
  o.require(n == 0, "fp4(c_example, b_example): " + std::to_string(n) + " nonzero entries");
  return o;
}

Outcome negative_controls() {
  Outcome o;
  {
    std::array<Polynomial, 10> y{};
    y[0] = 1;
    Tensor4 c = sl3::basis_c(0);
    c.set(1, 1, 2, 2, -c.at(1, 1, 2, 2));
    c.set(2, 2, 1, 1, -c.at(2, 2, 1, 1));
    Residual6 res = fp4_residual(c, sl3::b_of_y(y), g_jobs);
    std::string where = res.empty() ? "" : ", first at " + format_index(res.first()->first);
    o.require(!res.empty(), "c0 with c_1122 sign flipped: " + std::to_string(res.size()) + " nonzero fp4 entries" + where);
  }
  {
    sl3::Pair a1 = form(sl3::NormalForm::A1);
    Tensor4 b = a1.b;
    b.add(1, 2, 1, 2, Polynomial(1));
    bool still_valid = validate_b(b).passed;
    Residual6 res = fp4_residual(a1.c, b, g_jobs);
    o.require(still_valid && !res.empty(), "a1 with b_1212 += 1 (symmetric, traceless: " +
                                               std::string(still_valid ? "yes" : "no") + "): " +
                                               std::to_string(res.size()) + " nonzero fp4 entries");
  }
  {
    sl3::Pair a1 = form(sl3::NormalForm::A1);
    BracketTable t = restricted_quadratic(a1, lambda_star());
    VarId u = VarId::coord(1, 2), v = VarId::coord(2, 1);
    t.set(u, v, t.at(u, v) + Polynomial::variable(VarId::coord(1, 3)) * Polynomial::variable(VarId::coord(1, 3)));
    Report r = jacobi_check(t, g_jobs);
    o.require(!r.passed && r.witness.has_value(), "a1 table with {S12,S21} += S13^2: " + witness_text(r));
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "master identity fp4(c(y), b(y)) = 0", master_identity},
      {2, "nine normal forms solve fp4 and match b(y)", normal_forms},
      {3, "lambda certification on a1, a4, c3", lambda_certification},
      {4, "Poisson property at lambda*", poisson_property},
      {5, "compatibility with the linear bracket", compatibility},
      {6, "trace is a Casimir before restriction", trace_casimir},
      {7, "S0 row: {S0,S}_2 + lambda*{H,S}_1 = 0", s0_flow},
      {8, "Schouten factor -2", schouten_factor},
      {9, "pencil decomposition identities", decomposition},
      {10, "r-matrix example: c = 1/2(-c4 + c8), fp4 = 0", rmatrix_example},
      {11, "negative controls detected", negative_controls},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::optional<int> only;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 11));
  app.add_option("--jobs", g_jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (only && *only != c.id) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << kTolerance << "]\n";
    for (const std::string& d : o.details) std::cout << "    " << d << '\n';
    if (!o.passed) ++failures;
  }
  std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}

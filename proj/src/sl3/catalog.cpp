#include "bipoisson/sl3.hpp"

#include "bipoisson/errors.hpp"

namespace bipoisson::sl3 {

namespace {

using Listed = std::vector<std::pair<const char*, Polynomial>>;

Index4 quad(const char* s) {
  return {static_cast<std::uint8_t>(s[0] - '0'), static_cast<std::uint8_t>(s[1] - '0'),
          static_cast<std::uint8_t>(s[2] - '0'), static_cast<std::uint8_t>(s[3] - '0')};
}

Tensor4 skew(const Listed& listed) {
  Tensor4 t(3);
  for (const auto& [s, v] : listed) {
    Index4 k = quad(s);
    t.add(k[0], k[1], k[2], k[3], v);
    t.add(k[2], k[3], k[0], k[1], -v);
  }
  return t;
}

// Listed entries of a symmetric tensor; a pair listed twice must agree.
Tensor4 sym(const Listed& listed) {
  Tensor4 t(3);
  for (const auto& [s, v] : listed) {
    Index4 k = quad(s);
    for (const Index4& x : {k, Index4{k[2], k[3], k[0], k[1]}}) {
      const Polynomial& old = t.at(x);
      if (!old.is_zero() && !(old == v)) throw std::logic_error(std::string("inconsistent b entry ") + s);
      t.set(x[0], x[1], x[2], x[3], v);
    }
  }
  return t;
}

struct BasisRow {
  std::vector<const char*> listed;
  int value;
};

const std::array<BasisRow, 10>& basis_rows() {
  static const std::array<BasisRow, 10> rows = {{
      {{"1122", "3311", "2233", "1221", "3113", "2332"}, 1},
      {{"2212", "1233", "1332"}, 2},
      {{"1333", "2213", "2312"}, 2},
      {{"2311", "2113", "3323"}, 2},
      {{"2111", "3321", "3123"}, 2},
      {{"1131", "3221", "3122"}, 2},
      {{"1132", "1231", "3222"}, 2},
      {{"2131"}, 6},
      {{"3212"}, 6},
      {{"1323"}, 6},
  }};
  return rows;
}

struct YProduct {
  int coeff;
  int alpha;
  int beta;
};

struct BRow {
  const char* index;
  std::vector<YProduct> terms;
};

// b_{ijkl} as quadratic forms in y; the pair partners follow by symmetry.
const std::vector<BRow>& b_rows() {
  static const std::vector<BRow> rows = {
    {"1111", {{2, 0, 0}, {-8, 3, 6}}},
    {"1211", {{-4, 0, 1}, {-4, 2, 6}, {12, 3, 8}}},
    {"1212", {{8, 1, 1}, {24, 2, 8}}},
    {"1311", {{-4, 0, 2}, {-4, 1, 3}, {12, 6, 9}}},
    {"1312", {{4, 1, 2}, {-36, 8, 9}}},
    {"1313", {{24, 1, 9}, {8, 2, 2}}},
    {"2111", {{4, 0, 4}, {8, 3, 5}}},
    {"2112", {{-1, 0, 0}, {-4, 1, 4}, {4, 2, 5}, {4, 3, 6}}},
    {"2113", {{-4, 2, 4}, {-12, 5, 9}}},
    {"2121", {{24, 3, 7}, {8, 4, 4}}},
    {"2211", {{-1, 0, 0}, {-4, 1, 4}, {4, 2, 5}, {4, 3, 6}}},
    {"2212", {{4, 0, 1}, {8, 2, 6}}},
    {"2213", {{-4, 1, 3}, {-12, 6, 9}}},
    {"2221", {{-4, 0, 4}, {12, 2, 7}, {-4, 3, 5}}},
    {"2222", {{2, 0, 0}, {-8, 2, 5}}},
    {"2311", {{-4, 2, 4}, {-12, 5, 9}}},
    {"2312", {{-4, 1, 3}, {-12, 6, 9}}},
    {"2313", {{12, 0, 9}, {-8, 2, 3}}},
    {"2321", {{4, 3, 4}, {-36, 7, 9}}},
    {"2322", {{-4, 0, 3}, {-4, 2, 4}, {12, 5, 9}}},
    {"2323", {{8, 3, 3}, {24, 4, 9}}},
    {"3111", {{4, 0, 5}, {8, 4, 6}}},
    {"3112", {{-4, 1, 5}, {-12, 4, 8}}},
    {"3113", {{-1, 0, 0}, {4, 1, 4}, {-4, 2, 5}, {4, 3, 6}}},
    {"3121", {{12, 0, 7}, {-8, 4, 5}}},
    {"3122", {{-12, 1, 7}, {-4, 4, 6}}},
    {"3123", {{-12, 2, 7}, {-4, 3, 5}}},
    {"3131", {{8, 5, 5}, {24, 6, 7}}},
    {"3211", {{-4, 1, 5}, {-12, 4, 8}}},
    {"3212", {{12, 0, 8}, {-8, 1, 6}}},
    {"3213", {{-4, 2, 6}, {-12, 3, 8}}},
    {"3221", {{-12, 1, 7}, {-4, 4, 6}}},
    {"3222", {{4, 0, 6}, {8, 1, 5}}},
    {"3223", {{-1, 0, 0}, {4, 1, 4}, {4, 2, 5}, {-4, 3, 6}}},
    {"3231", {{4, 5, 6}, {-36, 7, 8}}},
    {"3232", {{24, 5, 8}, {8, 6, 6}}},
    {"3311", {{-1, 0, 0}, {4, 1, 4}, {-4, 2, 5}, {4, 3, 6}}},
    {"3312", {{-4, 2, 6}, {-12, 3, 8}}},
    {"3313", {{4, 0, 2}, {8, 1, 3}}},
    {"3321", {{-12, 2, 7}, {-4, 3, 5}}},
    {"3322", {{-1, 0, 0}, {4, 1, 4}, {4, 2, 5}, {-4, 3, 6}}},
    {"3323", {{4, 0, 3}, {8, 2, 4}}},
    {"3331", {{-4, 0, 5}, {12, 1, 7}, {-4, 4, 6}}},
    {"3332", {{-4, 0, 6}, {-4, 1, 5}, {12, 4, 8}}},
    {"3333", {{2, 0, 0}, {-8, 1, 4}}},
  };
  return rows;
}

Polynomial require(const std::optional<Polynomial>& v, NormalForm f, const char* name) {
  if (!v) throw PreconditionError("normal form " + key(f) + " needs parameter " + name);
  return *v;
}

Listed scaled(std::initializer_list<const char*> keys, const Polynomial& v) {
  Listed out;
  for (const char* k : keys) out.emplace_back(k, v);
  return out;
}

Listed concat(Listed a, const Listed& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::initializer_list<const char*> kC0 = {"1122", "3311", "2233", "1221", "3113", "2332"};
const std::initializer_list<const char*> kC1 = {"2212", "1233", "1332"};
const std::initializer_list<const char*> kC2 = {"1333", "2213", "2312"};
const std::initializer_list<const char*> kC4 = {"2111", "3321", "3123"};
const std::initializer_list<const char*> kC5 = {"1131", "3221", "3122"};
const std::initializer_list<const char*> kC6 = {"1132", "1231", "3222"};

// a4 and b2 share the diagonal part of b, scaled by t^2.
Listed diagonal_b(const Polynomial& s) {
  return {{"1111", Rational(2) * s}, {"2112", -s}, {"2211", -s}, {"2222", Rational(2) * s}, {"3113", -s},
          {"3223", -s},    {"3311", -s}, {"3322", -s}, {"3333", Rational(2) * s}};
}

}  // namespace

Tensor4 basis_c(int alpha) {
  if (alpha < 0 || alpha > 9) throw PreconditionError("basis index must be in 0..9, got " + std::to_string(alpha));
  const BasisRow& row = basis_rows()[static_cast<std::size_t>(alpha)];
  Listed listed;
  for (const char* k : row.listed) listed.emplace_back(k, Polynomial(row.value));
  return skew(listed);
}

std::array<Polynomial, 10> symbolic_y() {
  std::array<Polynomial, 10> y;
  for (int i = 0; i < 10; ++i) y[static_cast<std::size_t>(i)] = Polynomial::variable(VarId::y(i));
  return y;
}

Tensor4 c_of_y(const std::array<Polynomial, 10>& y) {
  Tensor4 c(3);
  for (int alpha = 0; alpha < 10; ++alpha) {
    const Polynomial& ya = y[static_cast<std::size_t>(alpha)];
    if (!ya.is_zero()) c += ya * basis_c(alpha);
  }
  return c;
}

Tensor4 b_of_y(const std::array<Polynomial, 10>& y) {
  Listed listed;
  for (const BRow& row : b_rows()) {
    PolyBuilder v;
    for (const YProduct& p : row.terms) {
      v.add_product(y[static_cast<std::size_t>(p.alpha)], y[static_cast<std::size_t>(p.beta)], Rational(p.coeff));
    }
    listed.emplace_back(row.index, v.build());
  }
  return sym(listed);
}

Params Params::symbolic() { return {Polynomial::variable(VarId::t()), Polynomial::variable(VarId::a())}; }

std::string key(NormalForm f) {
  switch (f) {
    case NormalForm::A1: return "a1";
    case NormalForm::A2: return "a2";
    case NormalForm::A3: return "a3";
    case NormalForm::A4: return "a4";
    case NormalForm::B1: return "b1";
    case NormalForm::B2: return "b2";
    case NormalForm::C1: return "c1";
    case NormalForm::C2: return "c2";
    case NormalForm::C3: return "c3";
  }
  return "?";
}

std::optional<NormalForm> parse_form(std::string_view k) {
  for (NormalForm f : kNormalForms)
    if (key(f) == k) return f;
  return std::nullopt;
}

std::vector<std::string> parameters(NormalForm f) {
  switch (f) {
    case NormalForm::A4:
    case NormalForm::B2:
    case NormalForm::C2: return {"t"};
    case NormalForm::C3: return {"t", "a"};
    default: return {};
  }
}

std::array<Polynomial, 10> y_assignment(NormalForm f, const Params& p) {
  std::array<Polynomial, 10> y{};
  switch (f) {
    case NormalForm::A1: y[7] = 1; break;
    case NormalForm::A2: y[5] = -1; break;
    case NormalForm::A3: y[5] = y[6] = -1; break;
    case NormalForm::A4: y[0] = require(p.t, f, "t"); break;
    case NormalForm::B1:
      y[5] = -1;
      y[2] = 1;
      break;
    case NormalForm::B2: {
      Polynomial t = require(p.t, f, "t");
      y[0] = -t;
      y[7] = t;
      break;
    }
    case NormalForm::C1: y[1] = y[7] = -1; break;
    case NormalForm::C2: {
      Polynomial t = require(p.t, f, "t");
      y[1] = y[7] = -t;
      y[4] = t;
      break;
    }
    case NormalForm::C3: {
      Polynomial t = require(p.t, f, "t");
      y[7] = y[8] = y[9] = t;
      y[0] = require(p.a, f, "a");
      break;
    }
  }
  return y;
}

Pair normal_form(NormalForm f, const Params& p) {
  switch (f) {
    case NormalForm::A1:
      return {skew({{"2131", 6}}), Tensor4(3)};
    case NormalForm::A2:
      return {skew(scaled(kC5, -2)), sym({{"3131", 8}})};
    case NormalForm::A3:
      return {skew(concat(scaled(kC5, -2), scaled(kC6, -2))), sym({{"3131", 8}, {"3232", 8}, {"3231", 4}})};
    case NormalForm::A4: {
      Polynomial t = require(p.t, f, "t");
      return {skew(scaled(kC0, t)), sym(diagonal_b(t * t))};
    }
    case NormalForm::B1:
      return {skew(concat(scaled(kC5, -2), scaled(kC2, 2))),
              sym({{"1313", 8}, {"2112", -4}, {"2211", -4}, {"2222", 8}, {"3113", 4}, {"3131", 8}, {"3223", -4},
                   {"3311", 4}, {"3322", -4}})};
    case NormalForm::B2: {
      Polynomial t = require(p.t, f, "t");
      return {skew(concat(scaled(kC0, -t), {{"2131", Rational(6) * t}})),
              sym(concat(diagonal_b(t * t), {{"3121", Rational(-12) * (t * t)}}))};
    }
    case NormalForm::C1:
      return {skew(concat(scaled(kC1, -2), {{"2131", -6}})),
              sym({{"1212", 8}, {"3122", -12}, {"3221", -12}, {"3331", 12}})};
    case NormalForm::C2: {
      Polynomial t = require(p.t, f, "t");
      Polynomial t2 = t * t;
      return {skew(concat(concat(scaled(kC1, Rational(-2) * t), scaled(kC4, Rational(2) * t)), {{"2131", Rational(-6) * t}})),
              sym({{"1212", Rational(8) * t2},
                   {"2112", Rational(4) * t2},
                   {"2121", Rational(8) * t2},
                   {"2211", Rational(4) * t2},
                   {"3113", Rational(-4) * t2},
                   {"3122", Rational(-12) * t2},
                   {"3221", Rational(-12) * t2},
                   {"3223", Rational(-4) * t2},
                   {"3311", Rational(-4) * t2},
                   {"3322", Rational(-4) * t2},
                   {"3331", Rational(12) * t2},
                   {"3333", Rational(8) * t2}})};
    }
    case NormalForm::C3: {
      Polynomial t = require(p.t, f, "t");
      Polynomial a = require(p.a, f, "a");
      Polynomial a2 = a * a, t2 = t * t, ta = t * a;
      return {skew(concat(scaled(kC0, a), scaled({"2131", "3212", "1323"}, Rational(6) * t))),
              sym({{"1111", Rational(2) * a2},
                   {"1312", Rational(-36) * t2},
                   {"2112", -a2},
                   {"2211", -a2},
                   {"2222", Rational(2) * a2},
                   {"2313", Rational(12) * ta},
                   {"2321", Rational(-36) * t2},
                   {"3113", -a2},
                   {"3121", Rational(12) * ta},
                   {"3212", Rational(12) * ta},
                   {"3223", -a2},
                   {"3231", Rational(-36) * t2},
                   {"3311", -a2},
                   {"3322", -a2},
                   {"3333", Rational(2) * a2}})};
    }
  }
  throw PreconditionError("unknown normal form");
}

std::optional<Pair> listed_normal_form(NormalForm f, const Params& p) {
  switch (f) {
    case NormalForm::A3:
      return Pair{skew(scaled(kC5, -2)), sym({{"3131", 8}, {"3232", 8}, {"3231", 4}})};
    case NormalForm::C1:
      return Pair{skew(concat(scaled(kC1, -2), {{"2131", -6}})),
                  sym({{"1212", 8}, {"3122", -12}, {"3221", -12}, {"3321", 12}})};
    case NormalForm::C2: {
      Pair fixed = normal_form(f, p);
      fixed.b.set(3, 3, 3, 1, 0);
      fixed.b.set(3, 1, 3, 3, 0);
      return fixed;
    }
    default:
      return std::nullopt;
  }
}

std::string provenance(NormalForm f) {
  switch (f) {
    case NormalForm::A3:
      return "y5 = y6 = -1, so c = -c5 - c6; the source listing gives only the -c5 entries. "
             "c_1132 = c_1231 = c_3222 = -2 added.";
    case NormalForm::C1:
      return "y1 = y7 = -1; the source listing has b_3321 = 12, but b(y) at this point has b_3331 = 12 and "
             "b_3321 = 0. Stored b_3331 = 12.";
    case NormalForm::C2:
      return "y1 = y7 = -t, y4 = t; b_3331 = 12t^2 added (absent from the source listing). "
             "b_3311 = -4t^2 is listed twice there and stored once.";
    case NormalForm::A1: return "y7 = 1; as listed.";
    case NormalForm::A2: return "y5 = -1; as listed.";
    case NormalForm::A4: return "y0 = t; as listed.";
    case NormalForm::B1: return "y5 = -1, y2 = 1; as listed.";
    case NormalForm::B2: return "y0 = -t, y7 = t; as listed.";
    case NormalForm::C3: return "y7 = y8 = y9 = t, y0 = a; as listed.";
  }
  return "";
}

Pair rmatrix_example_parts() {
  Tensor4 c = skew({{"1121", 1}, {"2133", 1}, {"2331", 1}, {"3212", -3}});
  Tensor4 b = sym({{"3332", 3}, {"1231", -3}, {"1132", -3}, {"2121", 2}});
  return {std::move(c), std::move(b)};
}

Tensor4 rmatrix_example_b_doubled_diagonal() {
  Tensor4 b = rmatrix_example_parts().b;
  b.set(2, 1, 2, 1, 4);
  return b;
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (int alpha = 0; alpha < 10; ++alpha) {
    // c1..c3 name normal forms; those basis tensors go by basis-c1..basis-c3.
    std::string name = "c" + std::to_string(alpha);
    if (parse_form(name)) name = "basis-" + name;
    out.push_back({name, {}, "basis tensor c_" + std::to_string(alpha) + " (c only)"});
  }
  for (NormalForm f : kNormalForms) out.push_back({key(f), parameters(f), "normal form (c, b): " + provenance(f)});
  out.push_back({"rmatrix-example", {}, "constant and linear Laurent parts of the sl(3) r-matrix example (c, b)"});
  return out;
}

}  // namespace bipoisson::sl3

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bipoisson/tensor.hpp"

namespace bipoisson::sl3 {

/// Basis tensor c_alpha (alpha in 0..9) of the ten-dimensional solution
/// space at N = 3: the listed coefficients plus their skew partners.
/// Throws PreconditionError for alpha outside 0..9.
Tensor4 basis_c(int alpha);

/// Symmetric b as a function of the ten coefficients y_alpha of c.
Tensor4 b_of_y(const std::array<Polynomial, 10>& y);

/// (y0, ..., y9) as polynomial variables.
std::array<Polynomial, 10> symbolic_y();
/// sum_alpha y_alpha c_alpha for the given coefficients.
Tensor4 c_of_y(const std::array<Polynomial, 10>& y);

enum class NormalForm { A1, A2, A3, A4, B1, B2, C1, C2, C3 };

inline constexpr std::array<NormalForm, 9> kNormalForms = {
    NormalForm::A1, NormalForm::A2, NormalForm::A3, NormalForm::A4, NormalForm::B1,
    NormalForm::B2, NormalForm::C1, NormalForm::C2, NormalForm::C3};

/// Values for the family parameters; unset means "not supplied".
struct Params {
  std::optional<Polynomial> t;
  std::optional<Polynomial> a;

  /// t and a kept as polynomial variables.
  static Params symbolic();
};

struct Pair {
  Tensor4 c;
  Tensor4 b;
};

/// "a1" .. "c3"
std::string key(NormalForm f);
std::optional<NormalForm> parse_form(std::string_view key);
/// Parameter names the form depends on ("t", "a").
std::vector<std::string> parameters(NormalForm f);

/// The (c, b) pair of a normal form. Throws PreconditionError when a
/// parameter the form needs is missing.
Pair normal_form(NormalForm f, const Params& p);
/// The y-assignment of the form, e.g. y7 = 1 for a1.
std::array<Polynomial, 10> y_assignment(NormalForm f, const Params& p);
/// Where the stored data differ from the listing they were transcribed
/// from, and why.
std::string provenance(NormalForm f);

/// Forms as listed before the corrections recorded in provenance(); they
/// violate the tensor equation and serve as negative fixtures. Returns
/// nullopt for forms that needed no correction.
std::optional<Pair> listed_normal_form(NormalForm f, const Params& p);

/// Constant and linear Laurent coefficients of the sl(3) r-matrix example:
///   c = E11^E21 + E21^E33 + E23^E31 - 3 E32^E12,
///   b = 3 E33.E32 - 3 E12.E31 - 3 E11.E32 + 2 E21.E21
/// with X^Y = X(x)Y - Y(x)X and X.Y = X(x)Y + Y(x)X, where a diagonal term
/// k E_ij.E_ij contributes k to b_{ijij}.
Pair rmatrix_example_parts();
/// Same b with diagonal terms contributing 2k; fails the tensor equation.
Tensor4 rmatrix_example_b_doubled_diagonal();

struct CatalogEntry {
  std::string key;
  std::vector<std::string> parameters;
  std::string description;
};

/// All exportable keys: basis tensors (c0, basis-c1..basis-c3, c4..c9), the
/// normal forms a1..c3 and rmatrix-example.
std::vector<CatalogEntry> catalog();

}  // namespace bipoisson::sl3

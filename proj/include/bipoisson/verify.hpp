#pragma once

#include "bipoisson/brackets.hpp"
#include "bipoisson/report.hpp"
#include "bipoisson/tensor.hpp"
#include "bipoisson/trilinear.hpp"

namespace bipoisson {

/// Jacobiator over every coordinate triple u < v < w and every u = u < v
/// (C(m,3) + C(m,2) triples for m coordinates), in lexicographic order.
/// The witness is the first failing triple in that order whatever `jobs` is.
Report jacobi_check(const BracketTable& t, unsigned jobs = 1);

/// jacobi_check of t1 + lambda' t2 with lambda' symbolic. Throws
/// PreconditionError when the coordinate sets differ.
Report compatibility_check(const BracketTable& t1, const BracketTable& t2, unsigned jobs = 1);

/// Compares -2 sum_cyc {{u,v},w} against the Schouten bracket [P,P]
/// computed by the multivector engine, on every coordinate triple.
Report schouten_factor_check(const BracketTable& t, unsigned jobs = 1);

/// {u, sum_k S_kk} = 0 for every coordinate u. Needs an unrestricted table.
Report trace_casimir_check(const BracketTable& t);

enum class S0FlowForm {
  /// {S0, S_kl}_2 + lambda {H, S_kl}_1 = 0
  Opposite,
  /// {S_kl, S0}_2 = lambda {S_kl, H}_1, i.e. {S0, S_kl}_2 - lambda {H, S_kl}_1 = 0
  Same,
};
/// Evaluated through bracket_of on both tables; `h` is the Hamiltonian on
/// the full coordinates. Needs a table with lambda metadata.
Report s0_flow_check(const BracketTable& t, const Polynomial& h, S0FlowForm form);

/// Pieces of a quadratic table on restricted coordinates: the S0-free part
/// pi, the S0-coefficient pi1 and the S0 row v = pi1(lambda H).
struct PencilParts {
  BracketTable pi;
  BracketTable pi1;
  VectorFieldX v;
};

/// Splits a quadratic table (restricting it first if needed).
PencilParts pencil_parts(const BracketTable& quadratic);

/// Three sub-reports on the restricted coordinates:
///   [pi, pi] = 2 v ^ pi1, [pi, v] = 0 (as L_v pi = 0), [pi, pi1] = 0.
Report decomposition_check(const PencilParts& parts, unsigned jobs = 1);
/// Builds the parts from (c, b, lambda). Throws PreconditionError when the
/// fp4 residual of (c, b) is nonzero.
Report decomposition_check(const Tensor4& c, const Tensor4& b, const Rational& lambda, unsigned jobs = 1);

/// With the first and third decomposition identities holding, the second
/// must follow when N >= 3. Throws PreconditionError for N < 3 or when the
/// two hypotheses fail.
Report eqbasic2_followup_check(const Tensor4& c, const Tensor4& b, const Rational& lambda, unsigned jobs = 1);

}  // namespace bipoisson

#pragma once

#include "bipoisson/trilinear.hpp"

namespace bipoisson {

/// Schouten-Nijenhuis bracket of two bivectors, computed from the wedge
/// decomposition P = sum_{u<v} (P_uv d_u) ^ d_v and
///   [X1 ^ X2, Y1 ^ Y2] = sum_{i,j} (-1)^{i+j} [Xi, Yj] ^ X_{i'} ^ Y_{j'}
/// with the commutator of vector fields. The result is returned as its
/// values on coordinate differentials.
Trilinear schouten_bivectors(const BracketTable& p, const BracketTable& q, unsigned jobs = 1);

/// <df1 ^ df2 ^ df3, T> = sum_{a<b<c} T_abc det(d_{u_a,u_b,u_c} f_{1,2,3}).
Polynomial pairing(const Trilinear& t, const Polynomial& f1, const Polynomial& f2, const Polynomial& f3);

}  // namespace bipoisson

#pragma once

#include <vector>

#include "dynheight/binary_form.hpp"
#include "dynheight/integer.hpp"

namespace dynheight {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting. Every
/// intermediate division is exact, so the determinant never leaves Z.
Integer bareiss_determinant(IntMatrix m);

/// 2d x 2d Sylvester matrix of p(z) = P(z,1), q(z) = Q(z,1) taken with formal
/// degree d: d shifted rows of (a_d .. a_0) followed by d rows of (b_d .. b_0).
IntMatrix sylvester_matrix(const BinaryForm& P, const BinaryForm& Q);

/// Homogeneous resultant Res(P, Q), normalized so that Res(x^d, y^d) = 1.
/// Throws InvalidInput unless deg P = deg Q >= 1.
Integer sylvester_resultant(const BinaryForm& P, const BinaryForm& Q);

/// Forms of degree d-1 with
///   g1 P + g2 Q = Res(P,Q) x^(2d-1),   h1 P + h2 Q = Res(P,Q) y^(2d-1).
/// Their coefficients are signed (2d-1)-minors of the Sylvester system.
struct CofactorForms {
  BinaryForm g1, g2, h1, h2;
  Integer resultant;
};

/// Requires Res(P,Q) != 0. The identities are re-checked exactly before
/// returning.
CofactorForms cofactor_forms(const BinaryForm& P, const BinaryForm& Q);

/// A' = max of the l1 coefficient norms of g1, g2, h1, h2. With it,
/// ||F(z)|| >= |Res| / (2 A') for every complex z with max(|x|,|y|) = 1.
Integer cofactor_bound(const CofactorForms& c);

}  // namespace dynheight

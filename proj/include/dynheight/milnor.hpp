#pragma once

#include <array>
#include <span>
#include <vector>

#include "dynheight/certified.hpp"
#include "dynheight/lift.hpp"

namespace dynheight {

/// Elementary symmetric functions sigma_1 .. sigma_(d+1) of the d+1 fixed-point
/// multipliers of f (with multiplicity), computed exactly as the
/// characteristic polynomial of multiplication by f'(z) in
/// Q[z] / (fixed-point polynomial). No roots are extracted.
std::vector<Rational> multiplier_symmetric_functions(const HomogeneousLift& F);

/// Milnor coordinates of a quadratic map on rat_2 = A^2.
struct MilnorInvariants {
  Rational sigma1;
  Rational sigma2;
  Rational sigma3;  // always sigma1 - 2
  /// Coprime integer representative of [sigma1 : sigma2 : 1].
  std::array<Integer, 3> moduli_point;
  /// Weil height of the moduli point (log of a positive integer).
  CertifiedValue moduli_height;
};

/// Throws UnsupportedDegree unless d = 2.
MilnorInvariants milnor_invariants(const HomogeneousLift& F);

/// Weil height log max|c_i| of the coprime integer representative of a
/// rational projective point [c_0 : ... : c_n].
CertifiedValue projective_weil_height(std::span<const Rational> coords, std::vector<Integer>* representative = nullptr);

}  // namespace dynheight

#pragma once

// Operations on rational maps given by homogeneous lifts: evaluation,
// conjugation and the place-normalized resultant.

#include <utility>

#include "dynheight/certified.hpp"
#include "dynheight/lift.hpp"
#include "dynheight/mobius.hpp"
#include "dynheight/place.hpp"
#include "dynheight/point.hpp"

namespace dynheight {

/// (P(x,y), Q(x,y)) exactly.
std::pair<Rational, Rational> evaluate_lift(const HomogeneousLift& F, const Rational& x, const Rational& y);

/// Canonical representative of f(x).
ProjPoint apply_map(const HomogeneousLift& F, const ProjPoint& x);

/// Integer lift Phi o F o adj(Phi) of phi o f o phi^-1, where Phi is the
/// primitive integer matrix of phi. Not content normalized; satisfies
/// Res = det(Phi)^(d^2+d) Res(F).
HomogeneousLift conjugate_raw(const HomogeneousLift& F, const Mobius& phi);

/// Content-normalized lift of phi o f o phi^-1.
HomogeneousLift conjugate(const HomogeneousLift& F, const Mobius& phi);

/// ord_p of |Res(F)|_p / max|coeff|_p^(2d), negated: a nonnegative integer
/// that does not depend on the lift.
long normalized_resultant_ord(const HomogeneousLift& F, const Integer& p);

/// |Res(F)|_p / max_i,j{|a_i|_p, |b_j|_p}^(2d) as an exact rational p^-k.
Rational normalized_resultant_abs_exact(const HomogeneousLift& F, const Integer& p);

/// |Res(F)|_v / max|coeff|_v^(2d) at any place.
CertifiedValue normalized_resultant_abs(const HomogeneousLift& F, const Place& v);

/// log of normalized_resultant_abs (always <= 0 at finite places).
CertifiedValue log_normalized_resultant_abs(const HomogeneousLift& F, const Place& v);

}  // namespace dynheight

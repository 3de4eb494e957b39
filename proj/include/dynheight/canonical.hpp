#pragma once

// Global heights over Q as sums of local contributions.

#include <utility>
#include <vector>

#include "dynheight/certified.hpp"
#include "dynheight/lift.hpp"
#include "dynheight/local_heights.hpp"
#include "dynheight/place.hpp"
#include "dynheight/point.hpp"

namespace dynheight {

/// log max(|x0|, |x1|) of the coprime representative.
CertifiedValue weil_height(const ProjPoint& x);

struct HeightBreakdown {
  ProjPoint point;
  CertifiedValue total;
  /// Contributing places only, archimedean first then increasing p.
  std::vector<std::pair<Place, CertifiedValue>> per_place;
};

/// Places where H_{F,v} of a coprime integer point can be nonzero: infinity and
/// the primes dividing Res(F).
std::vector<Place> height_places(const HomogeneousLift& F);

/// Places where some term of g_{f,v}(x, y) can be nonzero: height_places plus
/// the primes dividing the wedge x~ ^ y~.
std::vector<Place> pairing_places(const HomogeneousLift& F, const ProjPoint& x, const ProjPoint& y);

HeightBreakdown canonical_height(const HomogeneousLift& F, const ProjPoint& x, int n_iter = kDefaultIterations);

struct CheckResult {
  double residual = 0.0;
  /// Combined certified error of the quantities compared.
  double err = 0.0;
  bool passed() const { return residual <= err; }
};

/// |h(f(x)) - d h(x)|; err is err(f(x)) + d err(x).
CheckResult functional_check(const HomogeneousLift& F, const ProjPoint& x, int n_iter = kDefaultIterations);

/// |sum_v g_{f,v}(x, y) - h(x) - h(y)|. Throws InvalidInput when x == y.
CheckResult pairing_identity_check(const HomogeneousLift& F, const ProjPoint& x, const ProjPoint& y,
                                   int n_iter = kDefaultIterations);

/// Upper bound on |h_f(x) - h(x)| for every x, from the step constants:
/// max(sum_v U_v, -sum_v L_v) / (d - 1).
double height_difference_bound(const HomogeneousLift& F);

}  // namespace dynheight

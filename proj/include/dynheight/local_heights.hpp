#pragma once

// Homogeneous local heights, Green pairings and escape radii at a single
// place of Q.

#include "dynheight/certified.hpp"
#include "dynheight/lift.hpp"
#include "dynheight/place.hpp"
#include "dynheight/point.hpp"

namespace dynheight {

inline constexpr int kDefaultIterations = 30;

/// Bounds L <= log||F(z)||_v - d log||z||_v <= U for all z != 0.
/// At a finite place both are rational multiples of log p, stored exactly in
/// the *_log_coefficient fields; at infinity they are rounded outward.
struct StepErrorConstant {
  Place v = Place::archimedean();
  double upper = 0.0;
  double lower = 0.0;
  bool exact = false;
  Rational upper_log_coefficient;
  Rational lower_log_coefficient;

  double magnitude() const;  // max(|U|, |L|)
};

StepErrorConstant step_error_constants(const HomogeneousLift& F, const Place& v);

/// Upper bound for max(|U|,|L|) / (d^n (d-1)).
double truncation_bound(const StepErrorConstant& c, int d, int n_iter);

/// H_{F,v}(x0, x1) = lim d^-n log||F^n(x0, x1)||_v, truncated after n_iter
/// steps with the remaining tail in err. Throws InvalidInput on (0, 0) or
/// n_iter < 1.
CertifiedValue hom_local_height(const HomogeneousLift& F, const Rational& x0, const Rational& x1, const Place& v,
                                int n_iter = kDefaultIterations);

/// Finite-place local height as k log p with k rational, plus the tail bound
/// (0 exactly when p does not divide Res of the primitive lift).
struct FiniteLocalHeight {
  Rational log_coefficient;
  double tail = 0.0;
};

FiniteLocalHeight finite_local_height(const HomogeneousLift& F, const Rational& x0, const Rational& x1,
                                      const Integer& p, int n_iter = kDefaultIterations);

/// g_{f,v}(x, y) on the canonical coprime lifts. Throws InvalidInput when
/// x == y.
CertifiedValue green_pairing(const HomogeneousLift& F, const ProjPoint& x, const ProjPoint& y, const Place& v,
                             int n_iter = kDefaultIterations);

struct EscapeRadius {
  Place v = Place::archimedean();
  /// Rounded up at infinity; at a finite place R = p^p_exponent exactly.
  double R = 1.0;
  Rational p_exponent;
};

/// Escape radius of the primitive lift of F.
EscapeRadius escape_radius(const HomogeneousLift& F, const Place& v);

/// Checks that ||F^k(z)||_v grows by a factor of at least (1+delta)^(d-1) at
/// each of n_steps steps, for the primitive lift of F. Throws Refused unless
/// ||z||_v > R (1 + delta) is certified, and InvalidInput for delta <= 0.
bool verify_escape(const HomogeneousLift& F, const Place& v, const Rational& x0, const Rational& x1,
                   int n_steps = 10, double delta = 0.1);

}  // namespace dynheight

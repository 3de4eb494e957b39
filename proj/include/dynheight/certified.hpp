#pragma once

#include <cmath>

#include "dynheight/interval.hpp"

namespace dynheight {

/// A real number known to lie in [value - err, value + err].
///
/// `exact` means no truncation was involved: the quantity is determined by a
/// finite computation, `value` is within one ulp of it and err is 0.
/// Limit quantities (local and canonical heights, Green pairings) carry the
/// proven tail bound plus all rounding in `err`.
struct CertifiedValue {
  double value = 0.0;
  double err = 0.0;
  bool exact = false;

  static CertifiedValue exact_value(double v) { return {v, 0.0, true}; }
  static CertifiedValue zero() { return {0.0, 0.0, true}; }

  /// Nearest double to the midpoint, radius rounded up.
  static CertifiedValue from_interval(const Interval& iv);

  double lower() const { return value - err; }
  double upper() const { return value + err; }

  CertifiedValue operator+(const CertifiedValue& o) const;
  CertifiedValue operator-(const CertifiedValue& o) const;
  CertifiedValue operator-() const { return {-value, err, exact}; }
  CertifiedValue& operator+=(const CertifiedValue& o) { return *this = *this + o; }
  /// Multiplication by an exactly representable scalar (integers, powers of 2).
  CertifiedValue scaled(double s) const;
};

/// Upper bound on the rounding error of one floating-point operation whose
/// correctly rounded result is `r`.
inline double rounding_slack(double r) {
  return std::ldexp(std::fabs(r), -52) + 4.9406564584124654e-324;
}

}  // namespace dynheight

#include "dynheight/certified.hpp"

#include <cmath>

namespace dynheight {

namespace {

// Round a nonnegative sum upward by one ulp so accumulated radii stay bounds.
double up(double x) { return std::nextafter(x, INFINITY); }

}  // namespace

CertifiedValue CertifiedValue::from_interval(const Interval& iv) {
  const double v = iv.mid();
  const double r = iv.radius_about(v);
  return {v, r, false};
}

CertifiedValue CertifiedValue::operator+(const CertifiedValue& o) const {
  const double s = value + o.value;
  const bool trivially_exact = (value == 0.0 || o.value == 0.0);
  double e = err + o.err;
  if (!trivially_exact) e += rounding_slack(s);
  return {s, e == 0.0 ? 0.0 : up(e), exact && o.exact && trivially_exact};
}

CertifiedValue CertifiedValue::operator-(const CertifiedValue& o) const { return *this + (-o); }

CertifiedValue CertifiedValue::scaled(double s) const {
  const double v = value * s;
  double e = err * std::fabs(s);
  int exponent = 0;
  const bool pow2 = std::frexp(std::fabs(s), &exponent) == 0.5;
  const bool lossless = pow2 || value == 0.0;
  if (!lossless) e += rounding_slack(v);
  return {v, e == 0.0 ? 0.0 : up(e), exact && lossless};
}

}  // namespace dynheight

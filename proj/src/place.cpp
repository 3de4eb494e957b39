#include "dynheight/place.hpp"

#include <stdexcept>

#include "dynheight/errors.hpp"

namespace dynheight {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw InvalidInput("place " + p.get_str() + " is not a prime");
  return Place(p);
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "infinity" || text == "Inf") return archimedean();
  return finite(parse_integer(text));
}

const Integer& Place::prime() const {
  if (is_archimedean()) throw std::logic_error("archimedean place has no prime");
  return p_;
}

std::string Place::to_string() const { return is_archimedean() ? "inf" : p_.get_str(); }

CertifiedValue rational_times_log(const Rational& k, const Integer& p) {
  if (k == 0) return CertifiedValue::zero();
  // A 256-bit enclosure pins the value to well under one ulp; otherwise the
  // radius goes into err.
  const Interval iv = Interval::point(k, 256) * Interval::log_of(p, 256);
  const double v = iv.mid();
  const double r = iv.radius_about(v);
  if (r <= rounding_slack(v) / 2) return CertifiedValue::exact_value(v);
  return {v, r, false};
}

CertifiedValue log_abs(const Rational& r, const Place& v) {
  if (r == 0) throw InvalidInput("log|0|");
  if (v.is_archimedean()) {
    Rational a = abs(r);
    if (a == 1) return CertifiedValue::zero();
    const Interval iv = Interval::log_of(a, 256);
    const double val = iv.mid();
    const double rad = iv.radius_about(val);
    if (rad <= rounding_slack(val) / 2) return CertifiedValue::exact_value(val);
    return {val, rad, false};
  }
  return rational_times_log(Rational(-valuation(r, v.prime())), v.prime());
}

}  // namespace dynheight

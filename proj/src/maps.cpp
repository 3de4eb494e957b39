#include "dynheight/maps.hpp"

#include "dynheight/errors.hpp"

namespace dynheight {

std::pair<Rational, Rational> evaluate_lift(const HomogeneousLift& F, const Rational& x, const Rational& y) {
  return {F.P().evaluate(x, y), F.Q().evaluate(x, y)};
}

ProjPoint apply_map(const HomogeneousLift& F, const ProjPoint& x) {
  return ProjPoint(F.P().evaluate(x.x0(), x.x1()), F.Q().evaluate(x.x0(), x.x1()));
}

HomogeneousLift conjugate_raw(const HomogeneousLift& F, const Mobius& phi) {
  const auto m = phi.primitive_integer();
  const Integer& a = m[0];
  const Integer& b = m[1];
  const Integer& c = m[2];
  const Integer& d = m[3];
  // F o adj(Phi), adj(Phi) = [[d, -b], [-c, a]].
  const BinaryForm p1 = F.P().substitute(d, -b, -c, a);
  const BinaryForm q1 = F.Q().substitute(d, -b, -c, a);
  return HomogeneousLift(p1.scaled(a) + q1.scaled(b), p1.scaled(c) + q1.scaled(d));
}

HomogeneousLift conjugate(const HomogeneousLift& F, const Mobius& phi) { return conjugate_raw(F, phi).normalized(); }

long normalized_resultant_ord(const HomogeneousLift& F, const Integer& p) {
  const long d = F.degree();
  return valuation(F.resultant(), p) - 2 * d * F.content_valuation(p);
}

Rational normalized_resultant_abs_exact(const HomogeneousLift& F, const Integer& p) {
  const long k = normalized_resultant_ord(F, p);
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(Integer(1), pk);
}

CertifiedValue normalized_resultant_abs(const HomogeneousLift& F, const Place& v) {
  Rational q;
  if (v.is_archimedean()) {
    Integer m = F.max_abs_coefficient();
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), m.get_mpz_t(), 2 * static_cast<unsigned long>(F.degree()));
    q = Rational(Integer(abs(F.resultant())), den);
    q.canonicalize();
  } else {
    q = normalized_resultant_abs_exact(F, v.prime());
  }
  if (q == 1) return CertifiedValue::exact_value(1.0);
  const Interval iv = Interval::point(q, 256);
  const double val = iv.mid();
  const double rad = iv.radius_about(val);
  if (rad <= rounding_slack(val) / 2) return CertifiedValue::exact_value(val);
  return {val, rad, false};
}

CertifiedValue log_normalized_resultant_abs(const HomogeneousLift& F, const Place& v) {
  if (!v.is_archimedean()) {
    return rational_times_log(Rational(-normalized_resultant_ord(F, v.prime())), v.prime());
  }
  Integer m = F.max_abs_coefficient();
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), m.get_mpz_t(), 2 * static_cast<unsigned long>(F.degree()));
  Rational q(Integer(abs(F.resultant())), den);
  q.canonicalize();
  return log_abs(q, v);
}

}  // namespace dynheight

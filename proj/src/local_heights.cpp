#include "dynheight/local_heights.hpp"

#include <cmath>
#include <stdexcept>

#include "dynheight/errors.hpp"
#include "dynheight/resultant.hpp"

namespace dynheight {

namespace {

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 4096;

double up(double x) { return std::nextafter(x, INFINITY); }

// x~ = r (a, b) with (a, b) coprime integers.
struct Primitive {
  Rational r;
  Integer a;
  Integer b;
};

Primitive primitive_decomposition(const Rational& x0, const Rational& x1) {
  if (x0 == 0 && x1 == 0) throw InvalidInput("the zero vector has no height");
  const std::array<Rational, 2> xs{x0, x1};
  const Integer l = lcm_of_denominators(xs);
  Integer a = Integer(x0.get_num()) * (l / x0.get_den());
  Integer b = Integer(x1.get_num()) * (l / x1.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  Rational r(g, l);
  r.canonicalize();
  return {r, a, b};
}

Integer power(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer mod_nonneg(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Valuations e_k of F(u_k) along the orbit of the primitive vector (a, b),
// where u_(k+1) = F(u_k) / p^e_k. F must be primitive. Arithmetic is done
// modulo p^M, which is enough because every e_k is at most ord_p Res(F).
std::vector<long> padic_step_valuations(const HomogeneousLift& F, const Integer& a, const Integer& b,
                                        const Integer& p, int n) {
  const long ord_res = valuation(F.resultant(), p);
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(n));
  if (ord_res == 0) {
    out.assign(static_cast<std::size_t>(n), 0);
    return out;
  }
  long prec = ord_res * n + 1;
  Integer modulus = power(p, static_cast<unsigned long>(prec));
  Integer u0 = mod_nonneg(a, modulus), u1 = mod_nonneg(b, modulus);
  for (int k = 0; k < n; ++k) {
    Integer w0 = mod_nonneg(F.P().evaluate(u0, u1), modulus);
    Integer w1 = mod_nonneg(F.Q().evaluate(u0, u1), modulus);
    const long v0 = w0 == 0 ? prec : valuation(w0, p);
    const long v1 = w1 == 0 ? prec : valuation(w1, p);
    const long e = std::min(v0, v1);
    if (e >= prec || e > ord_res) throw std::logic_error("p-adic precision exhausted");
    out.push_back(e);
    const Integer pe = power(p, static_cast<unsigned long>(e));
    prec -= e;
    modulus /= pe;
    u0 = mod_nonneg(w0 / pe, modulus);
    u1 = mod_nonneg(w1 / pe, modulus);
  }
  return out;
}

Interval eval_form(const BinaryForm& f, const Interval& x, const Interval& y) {
  const int d = f.degree();
  const mpfr_prec_t prec = x.precision();
  std::vector<Interval> xp, yp;
  xp.emplace_back(Interval::point(1.0, prec));
  yp.emplace_back(Interval::point(1.0, prec));
  for (int i = 1; i <= d; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
  }
  Interval acc = Interval::point(0.0, prec);
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    acc += Interval::point(f.coeff(i), prec) * xp[static_cast<std::size_t>(i)] *
           yp[static_cast<std::size_t>(d - i)];
  }
  return acc;
}

Interval log_norm(const Interval& x, const Interval& y) { return Interval::max(x.abs(), y.abs()).log(); }

// Rescale (x, y) by a common power of two so the larger coordinate is O(1).
long renormalize(Interval& x, Interval& y) {
  const long e = std::max(x.magnitude_exponent(), y.magnitude_exponent());
  x = x.scaled_pow2(-e);
  y = y.scaled_pow2(-e);
  return e;
}

// log||(a,b)|| + sum_{k<n} d^-(k+1) G_k, each G_k clamped to [L, U].
Interval archimedean_partial_sum(const HomogeneousLift& F, const Integer& a, const Integer& b, int n,
                                 const StepErrorConstant& c, mpfr_prec_t prec) {
  const int d = F.degree();
  Interval x = Interval::point(a, prec), y = Interval::point(b, prec);
  Interval total = log_norm(x, y);
  renormalize(x, y);
  Integer dk = d;
  for (int k = 0; k < n; ++k) {
    Interval px = eval_form(F.P(), x, y);
    Interval py = eval_form(F.Q(), x, y);
    const Interval g = (log_norm(px, py) - Interval::point(static_cast<double>(d), prec) * log_norm(x, y))
                           .clamp(c.lower, c.upper);
    total += g * Interval::point(Rational(Integer(1), dk), prec);
    dk *= d;
    x = std::move(px);
    y = std::move(py);
    renormalize(x, y);
  }
  return total;
}

Rational exact_rational(double x) { return Rational(x); }

}  // namespace

double StepErrorConstant::magnitude() const {
  if (exact && !v.is_archimedean()) {
    const Rational m = abs(upper_log_coefficient) > abs(lower_log_coefficient) ? Rational(abs(upper_log_coefficient))
                                                                               : Rational(abs(lower_log_coefficient));
    return (Interval::point(m, 128) * Interval::log_of(v.prime(), 128)).upper();
  }
  return std::max(std::fabs(upper), std::fabs(lower));
}

StepErrorConstant step_error_constants(const HomogeneousLift& F, const Place& v) {
  StepErrorConstant c;
  c.v = v;
  const int d = F.degree();
  if (!v.is_archimedean()) {
    const Integer& p = v.prime();
    const long content_ord = F.content_valuation(p);
    const long res_ord = valuation(F.resultant(), p);
    c.exact = true;
    c.upper_log_coefficient = Rational(-content_ord);
    c.lower_log_coefficient = Rational(-res_ord + (2 * d - 1) * content_ord);
    const Interval lp = Interval::log_of(p, 128);
    c.upper = (Interval::point(c.upper_log_coefficient, 128) * lp).upper();
    c.lower = (Interval::point(c.lower_log_coefficient, 128) * lp).lower();
    return c;
  }
  const mpfr_prec_t prec = 128;
  c.upper = Interval::log_of(Integer(F.max_abs_coefficient() * (d + 1)), prec).upper();
  const Integer a_prime = cofactor_bound(cofactor_forms(F.P(), F.Q()));
  Rational q(Integer(abs(F.resultant())), Integer(2 * a_prime));
  q.canonicalize();
  c.lower = Interval::log_of(q, prec).lower();
  c.exact = false;
  return c;
}

double truncation_bound(const StepErrorConstant& c, int d, int n_iter) {
  const double denom = std::pow(static_cast<double>(d), n_iter) * (d - 1);
  return up(up(c.magnitude() / denom) * (1.0 + 1e-14));
}

FiniteLocalHeight finite_local_height(const HomogeneousLift& F, const Rational& x0, const Rational& x1,
                                      const Integer& p, int n_iter) {
  if (n_iter < 1) throw InvalidInput("n_iter must be at least 1");
  const Primitive z = primitive_decomposition(x0, x1);
  Integer lambda;
  const HomogeneousLift F0 = F.normalized(&lambda);
  const int d = F.degree();
  const auto e = padic_step_valuations(F0, z.a, z.b, p, n_iter);
  Rational sum = 0;
  Integer dk = d;
  for (long ek : e) {
    if (ek != 0) sum += Rational(Integer(ek), dk);
    dk *= d;
  }
  FiniteLocalHeight out;
  out.log_coefficient = Rational(-valuation(z.r, p)) - sum - Rational(valuation(lambda, p), d - 1);
  out.log_coefficient.canonicalize();
  const StepErrorConstant c = step_error_constants(F0, Place::finite(p));
  out.tail = c.lower_log_coefficient == 0 ? 0.0 : truncation_bound(c, d, n_iter);
  return out;
}

CertifiedValue hom_local_height(const HomogeneousLift& F, const Rational& x0, const Rational& x1, const Place& v,
                                int n_iter) {
  if (n_iter < 1) throw InvalidInput("n_iter must be at least 1");
  if (!v.is_archimedean()) {
    const auto h = finite_local_height(F, x0, x1, v.prime(), n_iter);
    CertifiedValue out = rational_times_log(h.log_coefficient, v.prime());
    if (h.tail > 0) {
      out.err = up(out.err + h.tail);
      out.exact = false;
    }
    return out;
  }
  const Primitive z = primitive_decomposition(x0, x1);
  Integer lambda;
  const HomogeneousLift F0 = F.normalized(&lambda);
  const int d = F.degree();
  const StepErrorConstant c = step_error_constants(F0, v);
  const double tail = truncation_bound(c, d, n_iter);

  Interval total;
  for (mpfr_prec_t prec = kStartPrecision;; prec *= 2) {
    total = archimedean_partial_sum(F0, z.a, z.b, n_iter, c, prec);
    total += Interval::log_of(Rational(abs(z.r)), prec);
    if (abs(lambda) != 1) {
      total += Interval::log_of(Integer(abs(lambda)), prec) * Interval::point(Rational(1, d - 1), prec);
    }
    // The double midpoint itself costs half an ulp, so aim no lower than that.
    const double mid = total.mid();
    const double target = std::max(0.01 * tail, 4 * rounding_slack(mid));
    if (total.radius_about(mid) <= target || prec >= kMaxPrecision) break;
  }
  CertifiedValue out = CertifiedValue::from_interval(total);
  out.err = up(out.err + tail);
  return out;
}

CertifiedValue green_pairing(const HomogeneousLift& F, const ProjPoint& x, const ProjPoint& y, const Place& v,
                             int n_iter) {
  if (x == y) throw InvalidInput("Green pairing on the diagonal is +infinity at type-I points");
  const int d = F.degree();
  const Integer wedge_value = wedge(x, y);
  const Rational res_weight(1, d * (d - 1));
  if (!v.is_archimedean()) {
    const Integer& p = v.prime();
    const auto hx = finite_local_height(F, x.x0(), x.x1(), p, n_iter);
    const auto hy = finite_local_height(F, y.x0(), y.x1(), p, n_iter);
    Rational k = Rational(valuation(wedge_value, p)) + hx.log_coefficient + hy.log_coefficient +
                 Rational(valuation(F.resultant(), p)) * res_weight;
    k.canonicalize();
    CertifiedValue out = rational_times_log(k, p);
    const double tails = hx.tail + hy.tail;
    if (tails > 0) {
      out.err = up(out.err + up(tails));
      out.exact = false;
    }
    return out;
  }
  const CertifiedValue hx = hom_local_height(F, x.x0(), x.x1(), v, n_iter);
  const CertifiedValue hy = hom_local_height(F, y.x0(), y.x1(), v, n_iter);
  const Interval fixed = -Interval::log_of(Integer(abs(wedge_value)), 256) -
                         Interval::log_of(Integer(abs(F.resultant())), 256) * Interval::point(res_weight, 256);
  return CertifiedValue::from_interval(fixed) + hx + hy;
}

EscapeRadius escape_radius(const HomogeneousLift& F, const Place& v) {
  const HomogeneousLift F0 = F.normalized();
  const int d = F0.degree();
  EscapeRadius out;
  out.v = v;
  if (!v.is_archimedean()) {
    const Integer& p = v.prime();
    out.p_exponent = Rational(valuation(F0.resultant(), p), d - 1);
    out.p_exponent.canonicalize();
    const Interval logR = Interval::point(out.p_exponent, 128) * Interval::log_of(p, 128);
    out.R = up(std::exp(logR.upper()) * (1.0 + 1e-15));
    if (out.p_exponent == 0) out.R = 1.0;
    return out;
  }
  const Integer a_prime = cofactor_bound(cofactor_forms(F0.P(), F0.Q()));
  Rational q(Integer(2 * a_prime), Integer(abs(F0.resultant())));
  q.canonicalize();
  if (q <= 1) {
    out.R = 1.0;
    return out;
  }
  const Interval logR = Interval::log_of(q, 128) * Interval::point(Rational(1, d - 1), 128);
  out.R = up(std::exp(logR.upper()) * (1.0 + 1e-15));
  return out;
}

namespace {

bool verify_escape_finite(const HomogeneousLift& F0, const Integer& p, const Primitive& z, int n_steps,
                          const Rational& one_plus_delta) {
  const int d = F0.degree();
  // ||z||_p = p^m, R = p^rho.
  const long m = -valuation(z.r, p);
  Rational t = Rational(m) - Rational(valuation(F0.resultant(), p), d - 1);
  t.canonicalize();
  if (t <= 0) throw Refused("point lies inside the escape radius");
  // p^t > 1 + delta  <=>  p^num > (1 + delta)^den.
  const Integer num = t.get_num(), den = t.get_den();
  const Rational lhs(power(p, num.get_ui()));
  Rational rhs;
  mpq_class base = one_plus_delta;
  mpz_pow_ui(rhs.get_num_mpz_t(), base.get_num_mpz_t(), den.get_ui());
  mpz_pow_ui(rhs.get_den_mpz_t(), base.get_den_mpz_t(), den.get_ui());
  rhs.canonicalize();
  if (!(lhs > rhs)) throw Refused("point lies inside (1 + delta) times the escape radius");

  Rational growth_floor;
  mpz_pow_ui(growth_floor.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(d - 1));
  mpz_pow_ui(growth_floor.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(d - 1));
  growth_floor.canonicalize();

  // ||z_k|| = p^-s_k with s_(k+1) = d s_k + e_k.
  const auto e = padic_step_valuations(F0, z.a, z.b, p, n_steps);
  Integer s = valuation(z.r, p);
  for (long ek : e) {
    const Integer next = s * d + ek;
    const Integer gain = s - next;  // log_p of the growth ratio
    if (gain < 1) return false;
    if (Rational(power(p, gain.get_ui())) < growth_floor) return false;
    s = next;
  }
  return true;
}

// Growth check at infinity with intervals at the given precision; returns
// +1 certified escape, 0 undecided, -1 certified failure.
int verify_escape_archimedean(const HomogeneousLift& F0, const Primitive& z, int n_steps, double delta,
                              mpfr_prec_t prec) {
  const int d = F0.degree();
  const Interval log_growth = (Interval::point(1.0, prec) + Interval::point(delta, prec)).log() *
                              Interval::point(static_cast<double>(d - 1), prec);
  const Interval log2 = Interval::log_of(Integer(2), prec);
  Interval x = Interval::point(z.a, prec), y = Interval::point(z.b, prec);
  Interval scale = Interval::log_of(Rational(abs(z.r)), prec);
  scale += log2 * Interval::point(static_cast<double>(renormalize(x, y)), prec);
  Interval prev = scale + log_norm(x, y);
  int verdict = 1;
  for (int k = 0; k < n_steps; ++k) {
    Interval px = eval_form(F0.P(), x, y);
    Interval py = eval_form(F0.Q(), x, y);
    const long e = renormalize(px, py);
    scale = scale * Interval::point(static_cast<double>(d), prec) + log2 * Interval::point(static_cast<double>(e), prec);
    x = std::move(px);
    y = std::move(py);
    const Interval cur = scale + log_norm(x, y);
    const Interval margin = cur - prev - log_growth;
    if (margin.upper() < 0) return -1;
    if (!(margin.lower() >= 0)) verdict = 0;
    prev = cur;
  }
  return verdict;
}

}  // namespace

bool verify_escape(const HomogeneousLift& F, const Place& v, const Rational& x0, const Rational& x1, int n_steps,
                   double delta) {
  if (!(delta > 0) || !std::isfinite(delta)) throw InvalidInput("delta must be a positive finite number");
  if (n_steps < 1) throw InvalidInput("n_steps must be at least 1");
  const Primitive z = primitive_decomposition(x0, x1);
  const HomogeneousLift F0 = F.normalized();
  if (!v.is_archimedean()) {
    return verify_escape_finite(F0, v.prime(), z, n_steps, Rational(1) + exact_rational(delta));
  }
  const int d = F0.degree();
  const Integer a_prime = cofactor_bound(cofactor_forms(F0.P(), F0.Q()));
  Rational q(Integer(2 * a_prime), Integer(abs(F0.resultant())));
  q.canonicalize();
  const mpfr_prec_t prec0 = 256;
  const Interval logR = q <= 1 ? Interval::point(0.0, prec0)
                               : Interval::log_of(q, prec0) * Interval::point(Rational(1, d - 1), prec0);
  const Interval log_norm_z = Interval::log_of(Rational(abs(z.r)), prec0) +
                              log_norm(Interval::point(z.a, prec0), Interval::point(z.b, prec0));
  const Interval gap = log_norm_z - logR - (Interval::point(1.0, prec0) + Interval::point(delta, prec0)).log();
  if (!(gap.lower() > 0)) throw Refused("point is not certified outside (1 + delta) times the escape radius");
  for (mpfr_prec_t prec = 256;; prec *= 2) {
    const int verdict = verify_escape_archimedean(F0, z, n_steps, delta, prec);
    if (verdict != 0) return verdict > 0;
    if (prec >= kMaxPrecision) return false;
  }
}

}  // namespace dynheight

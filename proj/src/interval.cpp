#include "dynheight/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dynheight {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(const Integer& n, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::point(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::point(double x, mpfr_prec_t prec) { return hull(x, x, prec); }

Interval Interval::hull(double lo, double hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::log_of(const Rational& q, mpfr_prec_t prec) {
  if (q <= 0) throw std::domain_error("log of a non-positive rational");
  return point(q, prec).log();
}

Interval Interval::log_of(const Integer& n, mpfr_prec_t prec) {
  if (n <= 0) throw std::domain_error("log of a non-positive integer");
  return point(n, prec).log();
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  const mpfr_prec_t p = std::max(prec_, o.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  bool first = true;
  const mpfr_t* as[2] = {&lo_, &hi_};
  const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
  for (const auto* a : as) {
    for (const auto* b : bs) {
      mpfr_mul(t, *a, *b, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, *a, *b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::scaled_pow2(long e) const {
  Interval r(prec_);
  mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Interval r(prec_);
  mpfr_set_zero(r.lo_, 1);
  if (mpfr_cmpabs(lo_, hi_) > 0) {
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::log() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_inf(r.lo_, -1);
  } else {
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
  }
  if (mpfr_sgn(hi_) <= 0) {
    mpfr_set_inf(r.hi_, -1);
  } else {
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::clamp(double lo, double hi) const {
  Interval r(*this);
  mpfr_t b;
  mpfr_init2(b, 64);
  mpfr_set_d(b, lo, MPFR_RNDD);
  if (mpfr_less_p(r.lo_, b) || mpfr_nan_p(r.lo_)) mpfr_set(r.lo_, b, MPFR_RNDD);
  mpfr_set_d(b, hi, MPFR_RNDU);
  if (mpfr_greater_p(r.hi_, b) || mpfr_nan_p(r.hi_)) mpfr_set(r.hi_, b, MPFR_RNDU);
  mpfr_clear(b);
  if (mpfr_greater_p(r.lo_, r.hi_)) {
    throw std::logic_error("interval clamp produced an empty set");
  }
  return r;
}

Interval Interval::join(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid() const {
  mpfr_t m;
  mpfr_init2(m, prec_ + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double out = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return out;
}

double Interval::radius_about(double center) const {
  mpfr_t c, a, b;
  mpfr_inits2(prec_ + 64, c, a, b, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(c, center, MPFR_RNDN);
  mpfr_sub(a, hi_, c, MPFR_RNDU);
  mpfr_sub(b, c, lo_, MPFR_RNDU);
  mpfr_max(a, a, b, MPFR_RNDU);
  double out = mpfr_get_d(a, MPFR_RNDU);
  mpfr_clears(c, a, b, static_cast<mpfr_ptr>(nullptr));
  return std::max(out, 0.0);
}

bool Interval::finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

long Interval::magnitude_exponent() const {
  const bool lo_zero = mpfr_zero_p(lo_);
  const bool hi_zero = mpfr_zero_p(hi_);
  if (lo_zero && hi_zero) return 0;
  if (lo_zero) return mpfr_get_exp(hi_);
  if (hi_zero) return mpfr_get_exp(lo_);
  return std::max(mpfr_get_exp(lo_), mpfr_get_exp(hi_));
}

}  // namespace dynheight

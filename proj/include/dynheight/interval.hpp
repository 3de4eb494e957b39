#pragma once

// Closed real intervals with MPFR end-points. Every operation rounds the
// lower end-point down and the upper end-point up, so the true value of any
// expression evaluated on enclosures stays enclosed.

#include <mpfr.h>

#include "dynheight/integer.hpp"

namespace dynheight {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval point(const Integer& n, mpfr_prec_t prec);
  static Interval point(const Rational& q, mpfr_prec_t prec);
  static Interval point(double x, mpfr_prec_t prec);
  static Interval hull(double lo, double hi, mpfr_prec_t prec);
  /// Enclosure of log(q) for q > 0.
  static Interval log_of(const Rational& q, mpfr_prec_t prec);
  static Interval log_of(const Integer& n, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator-() const;
  Interval& operator+=(const Interval& o) { return *this = *this + o; }

  /// Exact multiplication by 2^e.
  Interval scaled_pow2(long e) const;
  Interval abs() const;
  /// Enclosure of log; a lower end-point <= 0 gives -inf below.
  Interval log() const;
  /// Intersection with [lo, hi]; the caller guarantees the true value lies in
  /// both sets, so an empty intersection means a bug upstream.
  Interval clamp(double lo, double hi) const;
  /// Smallest interval containing both.
  Interval join(const Interval& o) const;

  static Interval max(const Interval& a, const Interval& b);

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  double mid() const;    // nearest double to the midpoint
  /// Upper bound on max(hi - mid(), mid() - lo), as a double.
  double radius_about(double center) const;
  bool finite() const;
  /// Binary exponent of the larger end-point magnitude (mpfr_get_exp), or
  /// 0 when the interval is [0,0].
  long magnitude_exponent() const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace dynheight

#pragma once

#include <string>
#include <string_view>

#include "dynheight/certified.hpp"
#include "dynheight/integer.hpp"

namespace dynheight {

/// A place of Q: the archimedean absolute value or a finite prime p.
/// Local multiplicities N_v are all 1 over Q.
class Place {
 public:
  static Place archimedean() { return Place(Integer(0)); }
  /// Throws InvalidInput unless p is prime.
  static Place finite(const Integer& p);
  /// "inf" (also "oo", "infinity") or a prime in base 10.
  static Place parse(std::string_view text);

  bool is_archimedean() const { return p_ == 0; }
  /// Throws std::logic_error at the archimedean place.
  const Integer& prime() const;
  Rational multiplicity() const { return 1; }
  std::string to_string() const;

  bool operator==(const Place& o) const { return p_ == o.p_; }
  /// Archimedean first, then primes ascending.
  bool operator<(const Place& o) const { return p_ < o.p_; }

 private:
  explicit Place(Integer p) : p_(std::move(p)) {}
  Integer p_;
};

/// log|r|_v for r != 0. Finite places give -ord_p(r) log p (exact flag set).
CertifiedValue log_abs(const Rational& r, const Place& v);

/// Nearest double to k log p together with the exact flag; used for every
/// finite-place quantity that is a rational multiple of log p.
CertifiedValue rational_times_log(const Rational& k, const Integer& p);

}  // namespace dynheight

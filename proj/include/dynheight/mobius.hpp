#pragma once

#include <array>
#include <string>

#include "dynheight/integer.hpp"
#include "dynheight/point.hpp"

namespace dynheight {

/// An invertible 2x2 rational matrix [[a, b], [c, d]] acting on P^1 by
/// z -> (a z + b) / (c z + d). Scalar multiples act identically.
class Mobius {
 public:
  /// Throws InvalidInput if the determinant vanishes.
  Mobius(Rational a, Rational b, Rational c, Rational d);

  static Mobius identity() { return Mobius(1, 0, 0, 1); }
  static Mobius diagonal(Rational a, Rational d) { return Mobius(std::move(a), 0, 0, std::move(d)); }

  /// Row-major entry (i, j), i, j in {0, 1}.
  const Rational& entry(int i, int j) const { return m_[static_cast<std::size_t>(2 * i + j)]; }
  Rational determinant() const;

  /// Matrix product; (A * B) acts as A after B.
  Mobius operator*(const Mobius& o) const;
  Mobius inverse() const;

  /// The primitive integer matrix proportional to this one with its first
  /// nonzero entry (row-major) positive. Equal exactly when the actions agree.
  std::array<Integer, 4> primitive_integer() const;
  bool same_action(const Mobius& o) const { return primitive_integer() == o.primitive_integer(); }

  ProjPoint apply(const ProjPoint& x) const;

  /// Entries as rational strings, row-major [[a, b], [c, d]].
  std::array<std::array<std::string, 2>, 2> to_strings() const;

  bool operator==(const Mobius& o) const { return m_ == o.m_; }

 private:
  std::array<Rational, 4> m_;
};

/// Lexicographic order on primitive integer entries; used for deterministic
/// tie-breaking in searches.
bool lexicographic_less(const Mobius& a, const Mobius& b);

}  // namespace dynheight

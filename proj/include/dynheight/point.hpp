#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dynheight/integer.hpp"

namespace dynheight {

/// A rational point [x0:x1] of P^1 stored as its canonical coprime integer
/// representative: gcd(x0,x1) = 1 and x1 > 0, or [1:0].
class ProjPoint {
 public:
  /// Normalizes; throws InvalidInput for (0,0).
  ProjPoint(const Integer& x0, const Integer& x1);
  static ProjPoint from_rationals(const Rational& x0, const Rational& x1);
  static ProjPoint infinity() { return ProjPoint(1, 0); }
  /// Affine point z = [z:1].
  static ProjPoint affine(const Rational& z) { return from_rationals(z, 1); }
  /// Parses "[a:b]" with base-10 integers (brackets optional).
  static ProjPoint parse(std::string_view text);

  const Integer& x0() const { return x0_; }
  const Integer& x1() const { return x1_; }
  bool is_infinity() const { return x1_ == 0; }
  /// max(|x0|, |x1|) of the coprime representative.
  Integer naive_size() const;

  std::string to_string() const;

  bool operator==(const ProjPoint& o) const = default;

 private:
  Integer x0_;
  Integer x1_;
};

/// x0 y1 - x1 y0 of the canonical representatives.
Integer wedge(const ProjPoint& x, const ProjPoint& y);

/// Enumeration order: by naive size, then lexicographic on (x0, x1).
bool enumeration_less(const ProjPoint& a, const ProjPoint& b);

struct ProjPointHash {
  std::size_t operator()(const ProjPoint& p) const noexcept;
};

}  // namespace dynheight

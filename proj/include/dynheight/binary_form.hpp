#pragma once

#include <span>
#include <string>
#include <vector>

#include "dynheight/integer.hpp"

namespace dynheight {

/// Homogeneous integer polynomial sum_i coeffs[i] x^i y^(d-i).
class BinaryForm {
 public:
  BinaryForm() : coeffs_(1) {}
  explicit BinaryForm(std::vector<Integer> coeffs);

  static BinaryForm zero(int degree);
  static BinaryForm monomial(int degree, int x_power, Integer c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  std::span<const Integer> coeffs() const { return coeffs_; }
  bool is_zero() const;

  Integer evaluate(const Integer& x, const Integer& y) const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm scaled(const Integer& c) const;
  /// Exact division of every coefficient by c (c must divide the content).
  BinaryForm divided(const Integer& c) const;

  /// The form G(x,y) = F(alpha x + beta y, gamma x + delta y).
  BinaryForm substitute(const Integer& alpha, const Integer& beta, const Integer& gamma,
                        const Integer& delta) const;

  bool operator==(const BinaryForm& o) const = default;

  /// Human-readable, e.g. "x^2 - y^2".
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

}  // namespace dynheight

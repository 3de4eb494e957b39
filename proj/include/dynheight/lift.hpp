#pragma once

#include <string>
#include <vector>

#include "dynheight/binary_form.hpp"
#include "dynheight/integer.hpp"

namespace dynheight {

/// A rational map f of degree d >= 2 on P^1, represented by an integer
/// homogeneous lift F = (P, Q): f([x:y]) = [P(x,y) : Q(x,y)].
///
/// Construction rejects Res(P, Q) = 0. The lift is "content normalized" when
/// the gcd of all 2d+2 coefficients is 1 and the first nonzero coefficient in
/// wire order (a_d .. a_0, b_d .. b_0) is positive.
class HomogeneousLift {
 public:
  HomogeneousLift(BinaryForm P, BinaryForm Q);

  /// Builds and content-normalizes.
  static HomogeneousLift canonical(BinaryForm P, BinaryForm Q);
  /// Coefficients in wire order: P from x^d down to y^d, then Q likewise.
  static HomogeneousLift from_wire(const std::vector<Integer>& p_desc, const std::vector<Integer>& q_desc);

  int degree() const { return P_.degree(); }
  const BinaryForm& P() const { return P_; }
  const BinaryForm& Q() const { return Q_; }
  const Integer& resultant() const { return res_; }
  bool content_normalized() const { return normalized_; }

  /// gcd of all coefficients.
  Integer content() const;
  /// The content-normalized lift G with *this = scale * G.
  HomogeneousLift normalized(Integer* scale = nullptr) const;
  HomogeneousLift scaled(const Integer& c) const;

  std::vector<Integer> wire_coefficients() const;
  Integer max_abs_coefficient() const;
  /// Smallest ord_p over the nonzero coefficients.
  long content_valuation(const Integer& p) const;

  std::string to_string() const;

  bool operator==(const HomogeneousLift& o) const { return P_ == o.P_ && Q_ == o.Q_; }

 private:
  BinaryForm P_;
  BinaryForm Q_;
  Integer res_;
  bool normalized_ = false;
};

}  // namespace dynheight

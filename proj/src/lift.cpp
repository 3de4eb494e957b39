#include "dynheight/lift.hpp"

#include <algorithm>

#include "dynheight/errors.hpp"
#include "dynheight/resultant.hpp"

namespace dynheight {

namespace {

bool wire_sign_positive(const std::vector<Integer>& wire) {
  for (const auto& c : wire) {
    if (c != 0) return c > 0;
  }
  return true;
}

}  // namespace

HomogeneousLift::HomogeneousLift(BinaryForm P, BinaryForm Q) : P_(std::move(P)), Q_(std::move(Q)) {
  if (P_.degree() != Q_.degree()) throw InvalidInput("P and Q must have the same degree");
  if (P_.degree() < 2) throw InvalidInput("rational maps here have degree d >= 2");
  res_ = sylvester_resultant(P_, Q_);
  if (res_ == 0) throw InvalidInput("Res(P,Q) = 0: P and Q share a factor, not a degree-d map");
  const auto wire = wire_coefficients();
  normalized_ = content() == 1 && wire_sign_positive(wire);
}

HomogeneousLift HomogeneousLift::canonical(BinaryForm P, BinaryForm Q) {
  return HomogeneousLift(std::move(P), std::move(Q)).normalized();
}

HomogeneousLift HomogeneousLift::from_wire(const std::vector<Integer>& p_desc, const std::vector<Integer>& q_desc) {
  std::vector<Integer> p(p_desc.rbegin(), p_desc.rend());
  std::vector<Integer> q(q_desc.rbegin(), q_desc.rend());
  return HomogeneousLift(BinaryForm(std::move(p)), BinaryForm(std::move(q)));
}

Integer HomogeneousLift::content() const {
  Integer g = 0;
  for (const auto& c : P_.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& c : Q_.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

HomogeneousLift HomogeneousLift::normalized(Integer* scale) const {
  Integer c = content();
  if (!wire_sign_positive(wire_coefficients())) c = -c;
  if (scale != nullptr) *scale = c;
  if (c == 1) return *this;
  return HomogeneousLift(P_.divided(c), Q_.divided(c));
}

HomogeneousLift HomogeneousLift::scaled(const Integer& c) const {
  if (c == 0) throw InvalidInput("scaling a lift by zero");
  return HomogeneousLift(P_.scaled(c), Q_.scaled(c));
}

std::vector<Integer> HomogeneousLift::wire_coefficients() const {
  std::vector<Integer> out;
  const int d = degree();
  out.reserve(2 * static_cast<std::size_t>(d) + 2);
  for (int i = d; i >= 0; --i) out.push_back(P_.coeff(i));
  for (int i = d; i >= 0; --i) out.push_back(Q_.coeff(i));
  return out;
}

Integer HomogeneousLift::max_abs_coefficient() const {
  Integer m = 0;
  for (const auto& c : wire_coefficients()) m = std::max(m, Integer(abs(c)));
  return m;
}

long HomogeneousLift::content_valuation(const Integer& p) const { return valuation(content(), p); }

std::string HomogeneousLift::to_string() const { return "(" + P_.to_string() + ", " + Q_.to_string() + ")"; }

}  // namespace dynheight

#include "dynheight/binary_form.hpp"

#include <sstream>

#include "dynheight/errors.hpp"

namespace dynheight {

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("binary form needs at least one coefficient");
}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw InvalidInput("negative degree");
  return BinaryForm(std::vector<Integer>(static_cast<std::size_t>(degree) + 1));
}

BinaryForm BinaryForm::monomial(int degree, int x_power, Integer c) {
  BinaryForm f = zero(degree);
  f.coeffs_.at(static_cast<std::size_t>(x_power)) = std::move(c);
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Integer BinaryForm::evaluate(const Integer& x, const Integer& y) const {
  // acc_k = acc_{k+1} x + a_k y^(d-k), descending k.
  const int d = degree();
  Integer acc = coeffs_[static_cast<std::size_t>(d)];
  Integer ypow = 1;
  for (int i = d - 1; i >= 0; --i) {
    ypow *= y;
    acc = acc * x + coeffs_[static_cast<std::size_t>(i)] * ypow;
  }
  return acc;
}

Rational BinaryForm::evaluate(const Rational& x, const Rational& y) const {
  const int d = degree();
  Rational acc = coeffs_[static_cast<std::size_t>(d)];
  Rational ypow = 1;
  for (int i = d - 1; i >= 0; --i) {
    ypow *= y;
    acc = acc * x + Rational(coeffs_[static_cast<std::size_t>(i)]) * ypow;
  }
  acc.canonicalize();
  return acc;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (degree() != o.degree()) throw InvalidInput("adding forms of different degree");
  BinaryForm r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r = zero(degree() + o.degree());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

BinaryForm BinaryForm::scaled(const Integer& c) const {
  BinaryForm r = *this;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

BinaryForm BinaryForm::divided(const Integer& c) const {
  BinaryForm r = *this;
  for (auto& v : r.coeffs_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) throw InvalidInput("inexact form division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

BinaryForm BinaryForm::substitute(const Integer& alpha, const Integer& beta, const Integer& gamma,
                                  const Integer& delta) const {
  const int d = degree();
  // Linear forms: index i is the coefficient of x^i y^(1-i).
  const BinaryForm u(std::vector<Integer>{beta, alpha});
  const BinaryForm v(std::vector<Integer>{delta, gamma});
  std::vector<BinaryForm> upow{BinaryForm(std::vector<Integer>{1})};
  std::vector<BinaryForm> vpow{BinaryForm(std::vector<Integer>{1})};
  for (int k = 1; k <= d; ++k) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  BinaryForm r = zero(d);
  for (int i = 0; i <= d; ++i) {
    const Integer& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    r = r + (upow[static_cast<std::size_t>(i)] * vpow[static_cast<std::size_t>(d - i)]).scaled(a);
  }
  return r;
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  const int d = degree();
  for (int i = d; i >= 0; --i) {
    Integer c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const int j = d - i;
    const bool has_var = (i > 0 || j > 0);
    if (c != 1 || !has_var) os << c.get_str();
    if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace dynheight

#include "dynheight/mobius.hpp"

#include "dynheight/errors.hpp"

namespace dynheight {

Mobius::Mobius(Rational a, Rational b, Rational c, Rational d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& e : m_) e.canonicalize();
  if (determinant() == 0) throw InvalidInput("Mobius matrix is singular");
}

Rational Mobius::determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

Mobius Mobius::inverse() const {
  const Rational det = determinant();
  return Mobius(m_[3] / det, -m_[1] / det, -m_[2] / det, m_[0] / det);
}

std::array<Integer, 4> Mobius::primitive_integer() const {
  const Integer l = lcm_of_denominators(m_);
  std::array<Integer, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = Integer(m_[i].get_num()) * (l / m_[i].get_den());
  const Integer g = content(out);
  bool negate = false;
  for (const auto& e : out) {
    if (e != 0) {
      negate = e < 0;
      break;
    }
  }
  for (auto& e : out) {
    e /= g;
    if (negate) e = -e;
  }
  return out;
}

ProjPoint Mobius::apply(const ProjPoint& x) const {
  const auto m = primitive_integer();
  return ProjPoint(m[0] * x.x0() + m[1] * x.x1(), m[2] * x.x0() + m[3] * x.x1());
}

std::array<std::array<std::string, 2>, 2> Mobius::to_strings() const {
  return {{{to_string(m_[0]), to_string(m_[1])}, {to_string(m_[2]), to_string(m_[3])}}};
}

bool lexicographic_less(const Mobius& a, const Mobius& b) {
  return a.primitive_integer() < b.primitive_integer();
}

}  // namespace dynheight

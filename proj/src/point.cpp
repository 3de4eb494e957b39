#include "dynheight/point.hpp"

#include <functional>

#include "dynheight/errors.hpp"

namespace dynheight {

ProjPoint::ProjPoint(const Integer& x0, const Integer& x1) : x0_(x0), x1_(x1) {
  if (x0_ == 0 && x1_ == 0) throw InvalidInput("[0:0] is not a point of P^1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), x0_.get_mpz_t(), x1_.get_mpz_t());
  mpz_divexact(x0_.get_mpz_t(), x0_.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(x1_.get_mpz_t(), x1_.get_mpz_t(), g.get_mpz_t());
  if (x1_ < 0 || (x1_ == 0 && x0_ < 0)) {
    x0_ = -x0_;
    x1_ = -x1_;
  }
}

ProjPoint ProjPoint::from_rationals(const Rational& x0, const Rational& x1) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x0.get_den_mpz_t(), x1.get_den_mpz_t());
  return ProjPoint(Integer(x0.get_num()) * (l / x0.get_den()), Integer(x1.get_num()) * (l / x1.get_den()));
}

ProjPoint ProjPoint::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InvalidInput("unbalanced brackets in point '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidInput("point must look like [a:b]");
  return ProjPoint(parse_integer(text.substr(0, colon)), parse_integer(text.substr(colon + 1)));
}

Integer ProjPoint::naive_size() const {
  Integer a = abs(x0_);
  Integer b = abs(x1_);
  return a > b ? a : b;
}

std::string ProjPoint::to_string() const { return "[" + x0_.get_str() + ":" + x1_.get_str() + "]"; }

Integer wedge(const ProjPoint& x, const ProjPoint& y) { return x.x0() * y.x1() - x.x1() * y.x0(); }

bool enumeration_less(const ProjPoint& a, const ProjPoint& b) {
  const int c = cmp(a.naive_size(), b.naive_size());
  if (c != 0) return c < 0;
  if (a.x0() != b.x0()) return a.x0() < b.x0();
  return a.x1() < b.x1();
}

std::size_t ProjPointHash::operator()(const ProjPoint& p) const noexcept {
  const std::size_t h0 = mpz_fdiv_ui(p.x0().get_mpz_t(), 1000000007UL);
  const std::size_t h1 = mpz_fdiv_ui(p.x1().get_mpz_t(), 998244353UL);
  return h0 * 0x9E3779B97F4A7C15ULL ^ (h1 + (h0 << 6) + (h0 >> 2));
}

}  // namespace dynheight

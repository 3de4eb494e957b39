#include "dynheight/integer.hpp"

#include <algorithm>
#include <cctype>

#include "dynheight/errors.hpp"

namespace dynheight {

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Brent's cycle-finding rho; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer f = rho_factor(n);
  Integer rest = n / f;
  factor_into(f, out);
  factor_into(rest, out);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_decimal(text)) throw InvalidInput("not a base-10 integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long valuation(const Rational& q, const Integer& p) {
  return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

Integer strip_prime(const Integer& n, const Integer& p) {
  if (n == 0) return 0;
  Integer rest;
  mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return rest;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) throw InvalidInput("prime divisors of zero");
  Integer m = abs(n);
  std::vector<Integer> out;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
    if (Integer(p) * p > m) break;
  }
  std::vector<Integer> big;
  factor_into(m, big);
  out.insert(out.end(), big.begin(), big.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer content(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace dynheight

#include "dynheight/milnor.hpp"

#include <stdexcept>

#include "dynheight/errors.hpp"
#include "dynheight/maps.hpp"
#include "dynheight/place.hpp"

namespace dynheight {

namespace {

// Dense univariate polynomials over Q, index = power of z.
using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly derivative(const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw std::logic_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mod(const Poly& a, const Poly& m) { return divmod(a, m).second; }

// Inverse of a modulo m; throws if gcd(a, m) is not constant.
Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = mod(a, m);
  Poly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw std::logic_error("denominator shares a root with the fixed-point polynomial");
  for (auto& c : s0) c /= r0[0];
  return mod(s0, m);
}

Poly dehomogenize(const BinaryForm& f) {
  Poly r;
  for (const auto& c : f.coeffs()) r.emplace_back(c);
  trim(r);
  return r;
}

// Conjugate so that infinity is not fixed: then the fixed-point polynomial
// p(z) - z q(z) has full degree d+1 and carries every multiplier.
HomogeneousLift move_infinity_off_fixed_set(const HomogeneousLift& F) {
  const int d = F.degree();
  if (F.Q().coeff(d) != 0) return F;
  for (long k = 0;; ++k) {
    const long t = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    const ProjPoint pt = ProjPoint::affine(Rational(t));
    if (apply_map(F, pt) == pt) continue;
    return conjugate(F, Mobius(0, 1, 1, -t));
  }
}

}  // namespace

std::vector<Rational> multiplier_symmetric_functions(const HomogeneousLift& F) {
  const HomogeneousLift G = move_infinity_off_fixed_set(F);
  const int d = G.degree();
  const Poly p = dehomogenize(G.P());
  const Poly q = dehomogenize(G.Q());
  const Poly fixed = sub(p, mul(Poly{Rational(0), Rational(1)}, q));
  if (static_cast<int>(fixed.size()) != d + 2) throw std::logic_error("fixed-point polynomial lost degree");

  // lambda(z) = f'(z) = (p' q - p q') / q^2 reduced mod the fixed polynomial.
  const Poly num = sub(mul(derivative(p), q), mul(p, derivative(q)));
  const Poly lambda = mod(mul(num, inverse_mod(mul(q, q), fixed)), fixed);

  const std::size_t n = static_cast<std::size_t>(d) + 1;
  // Column j of M holds lambda * z^j mod fixed.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  Poly basis{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    const Poly col = mod(mul(lambda, basis), fixed);
    for (std::size_t i = 0; i < col.size(); ++i) M[i][j] = col[i];
    basis = mul(basis, Poly{Rational(0), Rational(1)});
  }

  // Power sums tr(M^k), then Newton's identities.
  std::vector<Rational> power_sums(n + 1);
  auto Mk = M;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += Mk[i][i];
    power_sums[k] = tr;
    if (k == n) break;
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (Mk[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += Mk[i][l] * M[l][j];
      }
    }
    Mk = std::move(next);
  }
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const Rational term = e[k - i] * power_sums[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / static_cast<long>(k);
    e[k].canonicalize();
  }
  return {e.begin() + 1, e.end()};
}

CertifiedValue projective_weil_height(std::span<const Rational> coords, std::vector<Integer>* representative) {
  const Integer l = lcm_of_denominators(coords);
  std::vector<Integer> ints;
  for (const auto& c : coords) ints.push_back(Integer(c.get_num()) * (l / c.get_den()));
  const Integer g = content(ints);
  if (g == 0) throw InvalidInput("all-zero projective point");
  Integer m = 0;
  for (auto& v : ints) {
    v /= g;
    if (abs(v) > m) m = abs(v);
  }
  if (representative != nullptr) *representative = ints;
  return log_abs(Rational(m), Place::archimedean());
}

MilnorInvariants milnor_invariants(const HomogeneousLift& F) {
  if (F.degree() != 2) {
    throw UnsupportedDegree("Milnor coordinates are defined here for d = 2 only (got d = " +
                            std::to_string(F.degree()) + ")");
  }
  const auto s = multiplier_symmetric_functions(F);
  MilnorInvariants out;
  out.sigma1 = s[0];
  out.sigma2 = s[1];
  out.sigma3 = s[2];
  const std::array<Rational, 3> coords{out.sigma1, out.sigma2, Rational(1)};
  std::vector<Integer> rep;
  out.moduli_height = projective_weil_height(coords, &rep);
  out.moduli_point = {rep[0], rep[1], rep[2]};
  return out;
}

}  // namespace dynheight

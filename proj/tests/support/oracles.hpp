#pragma once

// Independent reference computations used only by tests. Nothing here calls
// the code paths it is used to check.

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <vector>

#include "dynheight/integer.hpp"
#include "dynheight/lift.hpp"
#include "dynheight/point.hpp"

namespace dynheight::oracle {

/// Determinant by Laplace expansion along the first row.
inline Integer laplace_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      sub.push_back(std::move(row));
    }
    Integer term = m[0][c] * laplace_determinant(sub);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// Sylvester matrix built directly from the textbook definition: rows i = 0..d-1
/// hold z^(d-1-i) p(z), rows d+i hold z^(d-1-i) q(z), columns z^(2d-1) .. z^0.
inline Integer textbook_resultant(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  // a[i], b[i]: coefficient of x^i y^(d-i).
  const std::size_t d = a.size() - 1;
  const std::size_t n = 2 * d;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k <= d; ++k) {
      // z^(d-1-i) * a_k z^k lands on power k + d - 1 - i, column n-1-power.
      const std::size_t power = k + d - 1 - i;
      m[i][n - 1 - power] = a[k];
      m[d + i][n - 1 - power] = b[k];
    }
  }
  return laplace_determinant(m);
}

/// Roots of a complex polynomial (coefficients by ascending power) by the
/// Durand-Kerner iteration.
inline std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  const std::size_t n = c.size() - 1;
  const auto lead = c.back();
  for (auto& v : c) v /= lead;
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i));
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    double moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) den *= (z[i] - z[j]);
      }
      const auto step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  // Newton polish on the original polynomial.
  for (auto& r : z) {
    for (int k = 0; k < 5; ++k) {
      std::complex<double> f = 0, df = 0;
      for (std::size_t j = c.size(); j-- > 0;) {
        df = df * r + f;
        f = f * r + c[j];
      }
      if (std::abs(df) > 0) r -= f / df;
    }
  }
  return z;
}

/// Multipliers of all fixed points of f = P/Q numerically: finite fixed
/// points from the roots of P(z,1) - z Q(z,1), plus b_(d-1)/a_d when infinity
/// is fixed (b_d = 0).
inline std::vector<std::complex<double>> numeric_multipliers(const HomogeneousLift& F) {
  const int d = F.degree();
  std::vector<std::complex<double>> a, b;
  for (int i = 0; i <= d; ++i) {
    a.emplace_back(F.P().coeff(i).get_d());
    b.emplace_back(F.Q().coeff(i).get_d());
  }
  std::vector<std::complex<double>> fixed(static_cast<std::size_t>(d) + 2);
  for (int i = 0; i <= d; ++i) {
    fixed[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)];
    fixed[static_cast<std::size_t>(i) + 1] -= b[static_cast<std::size_t>(i)];
  }
  auto poly = [](const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
  };
  auto dpoly = [](const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
  };
  std::vector<std::complex<double>> out;
  for (const auto& z : polynomial_roots(fixed)) {
    const auto p = poly(a, z), q = poly(b, z);
    out.push_back((dpoly(a, z) * q - p * dpoly(b, z)) / (q * q));
  }
  if (F.Q().coeff(d) == 0) out.push_back(b[static_cast<std::size_t>(d) - 1] / a[static_cast<std::size_t>(d)]);
  return out;
}

/// Elementary symmetric functions of a list of complex numbers.
inline std::vector<std::complex<double>> elementary_symmetric(const std::vector<std::complex<double>>& xs) {
  std::vector<std::complex<double>> e(xs.size() + 1);
  e[0] = 1;
  for (const auto& x : xs) {
    for (std::size_t k = xs.size(); k >= 1; --k) e[k] += e[k - 1] * x;
  }
  return {e.begin() + 1, e.end()};
}

/// log max(|x0|,|x1|) of a coprime integer pair, in double.
inline double log_size(const Integer& a, const Integer& b) {
  const Integer m = abs(a) > abs(b) ? Integer(abs(a)) : Integer(abs(b));
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, m.get_mpz_t());
  return std::log(mant) + static_cast<double>(e) * std::log(2.0);
}

/// d^-n h(f^n(x)) by exact iteration of the canonical point; converges to the
/// canonical height with error O(1/d^n).
inline double iterated_height(const HomogeneousLift& F, const ProjPoint& x, int n) {
  Integer a = x.x0(), b = x.x1();
  for (int k = 0; k < n; ++k) {
    Integer na = F.P().evaluate(a, b);
    Integer nb = F.Q().evaluate(a, b);
    Integer g;
    mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    a = na / g;
    b = nb / g;
  }
  return log_size(a, b) / std::pow(static_cast<double>(F.degree()), n);
}

/// ord_p of max-norm of F^n(x~) computed by raw exact integer iteration
/// (no renormalization): returns min(ord_p P_n, ord_p Q_n).
inline long raw_iterate_valuation(const HomogeneousLift& F, Integer a, Integer b, int n, const Integer& p) {
  for (int k = 0; k < n; ++k) {
    Integer na = F.P().evaluate(a, b);
    Integer nb = F.Q().evaluate(a, b);
    a = std::move(na);
    b = std::move(nb);
  }
  long va = a == 0 ? LONG_MAX : valuation(a, p);
  long vb = b == 0 ? LONG_MAX : valuation(b, p);
  return std::min(va, vb);
}

}  // namespace dynheight::oracle

#include "dynheight/resultant.hpp"

#include <stdexcept>

#include "dynheight/errors.hpp"

namespace dynheight {

Integer bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix sylvester_matrix(const BinaryForm& P, const BinaryForm& Q) {
  const int d = P.degree();
  const std::size_t n = 2 * static_cast<std::size_t>(d);
  IntMatrix m(n, std::vector<Integer>(n));
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k <= d; ++k) {
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = P.coeff(d - k);
      m[static_cast<std::size_t>(d + r)][static_cast<std::size_t>(r + k)] = Q.coeff(d - k);
    }
  }
  return m;
}

Integer sylvester_resultant(const BinaryForm& P, const BinaryForm& Q) {
  if (P.degree() != Q.degree()) {
    throw InvalidInput("resultant needs forms of equal degree (got " + std::to_string(P.degree()) + " and " +
                       std::to_string(Q.degree()) + ")");
  }
  if (P.degree() < 1) throw InvalidInput("resultant needs degree >= 1");
  return bareiss_determinant(sylvester_matrix(P, Q));
}

namespace {

// Column j of the system for (g1, g2): coefficient of x^m y^(2d-1-m) in
// g1 P + g2 Q, where g1 = sum u_k x^k y^(d-1-k) (columns 0..d-1) and g2 uses
// columns d..2d-1.
IntMatrix cofactor_system(const BinaryForm& P, const BinaryForm& Q) {
  const int d = P.degree();
  const std::size_t n = 2 * static_cast<std::size_t>(d);
  IntMatrix m(n, std::vector<Integer>(n));
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i <= d; ++i) {
      m[static_cast<std::size_t>(k + i)][static_cast<std::size_t>(k)] = P.coeff(i);
      m[static_cast<std::size_t>(k + i)][static_cast<std::size_t>(d + k)] = Q.coeff(i);
    }
  }
  return m;
}

IntMatrix minor_of(const IntMatrix& m, std::size_t row, std::size_t col) {
  IntMatrix out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<Integer> r;
    r.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) r.push_back(m[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Solves M w = Res e_target by Cramer's rule; det M = +-Res so each entry is
// a signed cofactor.
std::pair<BinaryForm, BinaryForm> solve_for(const IntMatrix& m, const Integer& det_m, const Integer& res,
                                            std::size_t target, int d) {
  std::vector<Integer> g1(static_cast<std::size_t>(d)), g2(static_cast<std::size_t>(d));
  const int ratio = (res == det_m) ? 1 : -1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    Integer c = bareiss_determinant(minor_of(m, target, j));
    if ((target + j) % 2 == 1) c = -c;
    c *= ratio;
    if (j < static_cast<std::size_t>(d)) {
      g1[j] = c;
    } else {
      g2[j - static_cast<std::size_t>(d)] = c;
    }
  }
  return {BinaryForm(std::move(g1)), BinaryForm(std::move(g2))};
}

}  // namespace

CofactorForms cofactor_forms(const BinaryForm& P, const BinaryForm& Q) {
  const Integer res = sylvester_resultant(P, Q);
  if (res == 0) throw InvalidInput("cofactor identity needs Res(P,Q) != 0");
  const int d = P.degree();
  const IntMatrix m = cofactor_system(P, Q);
  const Integer det_m = bareiss_determinant(m);
  if (abs(det_m) != abs(res)) throw std::logic_error("cofactor system determinant is not +-Res");

  auto [g1, g2] = solve_for(m, det_m, res, 2 * static_cast<std::size_t>(d) - 1, d);
  auto [h1, h2] = solve_for(m, det_m, res, 0, d);

  const BinaryForm x_top = BinaryForm::monomial(2 * d - 1, 2 * d - 1, res);
  const BinaryForm y_top = BinaryForm::monomial(2 * d - 1, 0, res);
  if (g1 * P + g2 * Q != x_top || h1 * P + h2 * Q != y_top) {
    throw std::logic_error("cofactor identity failed to verify");
  }
  return {std::move(g1), std::move(g2), std::move(h1), std::move(h2), res};
}

Integer cofactor_bound(const CofactorForms& c) {
  auto l1 = [](const BinaryForm& f) {
    Integer s = 0;
    for (const auto& a : f.coeffs()) s += abs(a);
    return s;
  };
  Integer best = 0;
  for (const BinaryForm* f : {&c.g1, &c.g2, &c.h1, &c.h2}) {
    Integer v = l1(*f);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace dynheight

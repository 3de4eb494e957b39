#include "dynheight/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "dynheight/errors.hpp"
#include "dynheight/maps.hpp"

namespace dynheight {

namespace {

double up(double x) { return std::nextafter(x, INFINITY); }

void add_primes(std::vector<Integer>& into, const Integer& n) {
  if (n == 0) return;
  for (auto& p : prime_divisors(abs(n))) into.push_back(std::move(p));
}

std::vector<Place> places_from(std::vector<Integer> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::archimedean()};
  for (const auto& p : primes) out.push_back(Place::finite(p));
  return out;
}

}  // namespace

CertifiedValue weil_height(const ProjPoint& x) { return log_abs(Rational(x.naive_size()), Place::archimedean()); }

std::vector<Place> height_places(const HomogeneousLift& F) {
  std::vector<Integer> primes;
  add_primes(primes, F.resultant());
  return places_from(std::move(primes));
}

std::vector<Place> pairing_places(const HomogeneousLift& F, const ProjPoint& x, const ProjPoint& y) {
  std::vector<Integer> primes;
  add_primes(primes, F.resultant());
  add_primes(primes, wedge(x, y));
  return places_from(std::move(primes));
}

HeightBreakdown canonical_height(const HomogeneousLift& F, const ProjPoint& x, int n_iter) {
  HeightBreakdown out{x, CertifiedValue::zero(), {}};
  for (const auto& v : height_places(F)) {
    CertifiedValue h = hom_local_height(F, x.x0(), x.x1(), v, n_iter);
    if (!v.is_archimedean() && h.exact && h.value == 0.0) continue;
    out.total += h;
    out.per_place.emplace_back(v, h);
  }
  return out;
}

CheckResult functional_check(const HomogeneousLift& F, const ProjPoint& x, int n_iter) {
  const int d = F.degree();
  const auto hx = canonical_height(F, x, n_iter).total;
  const auto hfx = canonical_height(F, apply_map(F, x), n_iter).total;
  const CertifiedValue diff = hfx - hx.scaled(d);
  return {std::fabs(diff.value), diff.err};
}

CheckResult pairing_identity_check(const HomogeneousLift& F, const ProjPoint& x, const ProjPoint& y, int n_iter) {
  if (x == y) throw InvalidInput("pairing identity needs distinct points");
  CertifiedValue sum = CertifiedValue::zero();
  for (const auto& v : pairing_places(F, x, y)) sum += green_pairing(F, x, y, v, n_iter);
  const CertifiedValue diff = sum - canonical_height(F, x, n_iter).total - canonical_height(F, y, n_iter).total;
  return {std::fabs(diff.value), diff.err};
}

double height_difference_bound(const HomogeneousLift& F) {
  const HomogeneousLift F0 = F.normalized();
  double upper = 0.0, lower = 0.0;
  for (const auto& v : height_places(F0)) {
    const auto c = step_error_constants(F0, v);
    upper = up(upper + c.upper);
    lower = std::nextafter(lower + c.lower, -INFINITY);
  }
  return up(std::max(upper, -lower) / (F0.degree() - 1));
}

}  // namespace dynheight

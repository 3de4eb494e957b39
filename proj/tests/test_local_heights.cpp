#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dynheight/errors.hpp"
#include "dynheight/local_heights.hpp"
#include "dynheight/maps.hpp"
#include "dynheight/reduction.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace dynheight;

namespace {

BinaryForm form(std::initializer_list<long> ascending) {
  std::vector<Integer> c;
  for (long v : ascending) c.emplace_back(v);
  return BinaryForm(c);
}

HomogeneousLift z_squared() { return HomogeneousLift(form({0, 0, 1}), form({1, 0, 0})); }
HomogeneousLift three_z_squared() { return HomogeneousLift(form({0, 0, 3}), form({1, 0, 0})); }

const Place inf = Place::archimedean();

bool within(const CertifiedValue& a, double want, double slack = 0.0) {
  return std::fabs(a.value - want) <= a.err + slack;
}

// Raw iterate of an integer vector without any rescaling.
std::pair<Integer, Integer> raw_iterate(const HomogeneousLift& F, Integer a, Integer b, int n) {
  for (int k = 0; k < n; ++k) {
    Integer na = F.P().evaluate(a, b);
    Integer nb = F.Q().evaluate(a, b);
    a = std::move(na);
    b = std::move(nb);
  }
  return {a, b};
}

}  // namespace

TEST_CASE("step error constants") {
  auto c = step_error_constants(z_squared(), Place::finite(5));
  CHECK(c.exact);
  CHECK(c.upper_log_coefficient == 0);
  CHECK(c.lower_log_coefficient == 0);

  c = step_error_constants(three_z_squared(), Place::finite(3));
  CHECK(c.upper_log_coefficient == 0);
  CHECK(c.lower_log_coefficient == -2);
  CHECK(c.lower == doctest::Approx(-2 * std::log(3.0)).epsilon(1e-15));

  c = step_error_constants(z_squared(), inf);
  CHECK(c.upper >= std::log(3.0));
  CHECK(c.upper <= std::log(3.0) + 1e-15);
  CHECK(c.lower <= -std::log(2.0));
  CHECK(c.lower >= -std::log(2.0) - 1e-15);

  // Non-primitive lift at p: U = -c log p, L = log|Res|_p + (2d-1) c log p.
  c = step_error_constants(z_squared().scaled(2), Place::finite(2));
  CHECK(c.upper_log_coefficient == -1);
  CHECK(c.lower_log_coefficient == -4 + 3);
}

TEST_CASE("step error constants bound sampled steps") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto F = gen::random_map(rng, 2 + trial % 2);
    const auto c = step_error_constants(F, inf);
    for (int k = 0; k < 20; ++k) {
      const auto x = gen::random_point(rng, 1000);
      const auto [a, b] = evaluate_lift(F, x.x0(), x.x1());
      const double g = oracle::log_size(a.get_num(), b.get_num()) -
                       F.degree() * oracle::log_size(x.x0(), x.x1());
      CHECK(g <= c.upper + 1e-12);
      CHECK(g >= c.lower - 1e-12);
    }
  }
}

TEST_CASE("local height examples") {
  auto h = hom_local_height(z_squared(), 2, 1, inf, 30);
  CHECK(within(h, std::log(2.0)));
  CHECK(h.err <= step_error_constants(z_squared(), inf).magnitude() / std::pow(2.0, 30) * 1.01);
  CHECK(std::fabs(h.value - std::log(2.0)) <= 1e-12);

  h = hom_local_height(z_squared(), 2, 1, Place::finite(2), 30);
  CHECK(h.exact);
  CHECK(h.value == 0.0);
  CHECK(h.err == 0.0);

  h = hom_local_height(three_z_squared(), 1, 1, Place::finite(3), 20);
  const long raw = oracle::raw_iterate_valuation(three_z_squared(), 1, 1, 20, Integer(3));
  CHECK(within(h, -static_cast<double>(raw) / std::pow(2.0, 20) * std::log(3.0)));

  CHECK_THROWS_AS(hom_local_height(z_squared(), 0, 0, inf, 10), InvalidInput);
  CHECK_THROWS_AS(hom_local_height(z_squared(), 1, 0, inf, 0), InvalidInput);
}

TEST_CASE("truncated p-adic local height equals the raw iterate valuation exactly") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const auto F = gen::random_map(rng, d);
    const int n = d == 2 ? 8 : 5;
    const auto x = gen::random_point(rng);
    for (const auto& p : prime_divisors(abs(F.resultant()))) {
      if (p > 50) continue;
      const auto h = finite_local_height(F, x.x0(), x.x1(), p, n);
      const long raw = oracle::raw_iterate_valuation(F, x.x0(), x.x1(), n, p);
      Integer dn;
      mpz_pow_ui(dn.get_mpz_t(), Integer(d).get_mpz_t(), static_cast<unsigned long>(n));
      Rational want(Integer(-raw), dn);
      want.canonicalize();
      CHECK(h.log_coefficient == want);
    }
  }
}

TEST_CASE("archimedean local height agrees with the raw iterate limit") {
  gen::Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const auto F = gen::random_map(rng, d);
    const int n = d == 2 ? 9 : 6;
    const auto x = gen::random_point(rng);
    const auto h = hom_local_height(F, x.x0(), x.x1(), inf, 40);
    const auto [a, b] = raw_iterate(F, x.x0(), x.x1(), n);
    const double approx = oracle::log_size(a, b) / std::pow(static_cast<double>(d), n);
    const double tail = truncation_bound(step_error_constants(F, inf), d, n);
    CHECK(std::fabs(h.value - approx) <= h.err + tail + 1e-12);
  }
}

TEST_CASE("local height homogeneity and lift rescaling") {
  gen::Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const auto F = gen::random_map(rng, d);
    const auto x = gen::random_point(rng);
    const Rational lambda(gen::uniform(rng, 1, 30), gen::uniform(rng, 1, 30));
    for (const Place& v : {inf, Place::finite(2), Place::finite(3)}) {
      const auto h = hom_local_height(F, x.x0(), x.x1(), v, 30);
      const auto hs = hom_local_height(F, lambda * x.x0(), lambda * x.x1(), v, 30);
      const auto loglam = log_abs(lambda, v);
      CHECK(std::fabs(hs.value - h.value - loglam.value) <= h.err + hs.err + loglam.err + 1e-13);

      // F -> cF shifts H by log|c|/(d-1).
      const long c = gen::uniform(rng, 2, 12);
      const auto hc = hom_local_height(F.scaled(c), x.x0(), x.x1(), v, 30);
      const auto logc = log_abs(Rational(c), v);
      CHECK(std::fabs(hc.value - h.value - logc.value / (d - 1)) <= h.err + hc.err + logc.err + 1e-13);
    }
  }
}

TEST_CASE("truncation soundness: doubling n_iter stays inside the old error") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 2;
    const auto F = gen::random_map(rng, d);
    const auto x = gen::random_point(rng);
    for (const Place& v : {inf, Place::finite(2), Place::finite(5)}) {
      const auto a = hom_local_height(F, x.x0(), x.x1(), v, 10);
      const auto b = hom_local_height(F, x.x0(), x.x1(), v, 20);
      CHECK(std::fabs(a.value - b.value) <= a.err + 1e-13);
      CHECK(b.err <= a.err);
    }
  }
}

TEST_CASE("green pairing examples") {
  auto g = green_pairing(z_squared(), ProjPoint(0, 1), ProjPoint::infinity(), inf, 30);
  CHECK(within(g, 0.0));
  g = green_pairing(z_squared(), ProjPoint(2, 1), ProjPoint(3, 1), inf, 30);
  CHECK(within(g, std::log(6.0)));
  CHECK(std::fabs(g.value - std::log(6.0)) <= 1e-10);
  g = green_pairing(z_squared(), ProjPoint(2, 1), ProjPoint(3, 1), Place::finite(5), 30);
  CHECK(g.exact);
  CHECK(g.value == 0.0);
  CHECK_THROWS_AS(green_pairing(z_squared(), ProjPoint(2, 1), ProjPoint(2, 1), inf, 30), InvalidInput);
}

TEST_CASE("green pairing is independent of the lift") {
  gen::Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto F = gen::random_map(rng, 2 + trial % 2);
    const auto [x, y] = gen::random_distinct_pair(rng);
    const auto G = F.scaled(gen::uniform(rng, 2, 18) * (trial % 2 ? -1 : 1));
    for (const Place& v : {inf, Place::finite(2), Place::finite(3), Place::finite(7)}) {
      const auto a = green_pairing(F, x, y, v, 30);
      const auto b = green_pairing(G, x, y, v, 30);
      CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-13);
    }
  }
}

TEST_CASE("green pairing is Mobius equivariant under unimodular conjugation") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto F = gen::random_map(rng, 2 + trial % 2);
    const auto phi = gen::random_unimodular(rng);
    const auto G = conjugate(F, phi);
    const auto [x, y] = gen::random_distinct_pair(rng);
    for (const Place& v : {inf, Place::finite(2), Place::finite(3)}) {
      const auto a = green_pairing(F, x, y, v, 30);
      const auto b = green_pairing(G, phi.apply(x), phi.apply(y), v, 30);
      CHECK(std::fabs(a.value - b.value) <= a.err + b.err + 1e-13);
    }
  }
}

TEST_CASE("green pairing is nonnegative at primes of good reduction") {
  gen::Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const auto F = gen::random_map(rng, 2 + trial % 2);
    for (long p : {2L, 3L, 5L, 7L}) {
      if (minimal_resultant_ord(F, p).ord_min != 0) continue;
      for (int k = 0; k < 5; ++k) {
        const auto [x, y] = gen::random_distinct_pair(rng);
        const auto g = green_pairing(F, x, y, Place::finite(p), 30);
        CHECK(g.value >= -g.err);
      }
    }
  }
}

TEST_CASE("finite pairings vanish away from Res and the wedge") {
  gen::Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const auto F = gen::random_map(rng, 2 + trial % 2);
    const auto [x, y] = gen::random_distinct_pair(rng);
    const Integer w = wedge(x, y);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      if (F.resultant() % p == 0 || w % p == 0) continue;
      const auto g = green_pairing(F, x, y, Place::finite(p), 30);
      CHECK(g.exact);
      CHECK(g.value == 0.0);
    }
  }
}

TEST_CASE("escape radius examples") {
  auto r = escape_radius(z_squared(), Place::finite(7));
  CHECK(r.R == 1.0);
  r = escape_radius(three_z_squared(), Place::finite(3));
  CHECK(r.p_exponent == 2);
  CHECK(r.R == doctest::Approx(9.0).epsilon(1e-14));
  r = escape_radius(z_squared(), inf);
  CHECK(r.R == doctest::Approx(2.0).epsilon(1e-14));  // 2A'/|Res| = 2
  CHECK(r.R >= 2.0);
}

TEST_CASE("verify_escape examples") {
  CHECK(verify_escape(z_squared(), inf, 3, 1, 10, 0.1));
  CHECK(verify_escape(three_z_squared(), Place::finite(3), Rational(1, 27), 1, 10, 0.1));
  CHECK_THROWS_AS(verify_escape(z_squared(), Place::finite(5), 1, 1, 10, 0.1), Refused);
  CHECK_THROWS_AS(verify_escape(z_squared(), inf, 2, 1, 10, 0.1), Refused);  // 2 < 2.2
  CHECK_THROWS_AS(verify_escape(z_squared(), inf, 3, 1, 10, 0.0), InvalidInput);
}

TEST_CASE("points beyond (1+delta) R escape at every tested place") {
  gen::Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    const auto F = gen::random_map(rng, d);
    for (const Place& v : {inf, Place::finite(2), Place::finite(3)}) {
      const auto R = escape_radius(F, v);
      for (int k = 0; k < 5; ++k) {
        Rational x0, x1;
        const auto pt = gen::random_point(rng);
        if (v.is_archimedean()) {
          const Rational scale(static_cast<long>(std::ceil(R.R * 1.1)) + 1 + gen::uniform(rng, 0, 50));
          x0 = scale * (pt.x0() == 0 ? Integer(1) : pt.x0());
          x1 = scale * pt.x1();
        } else {
          Integer pk;
          const long k_exp = R.p_exponent.get_num().get_si() / R.p_exponent.get_den().get_si() + 1 +
                             gen::uniform(rng, 0, 2);
          mpz_pow_ui(pk.get_mpz_t(), v.prime().get_mpz_t(), static_cast<unsigned long>(k_exp));
          // Unit numerator, so ||(x0, x1)||_p = p^k_exp > p^rho.
          x0 = Rational(Integer(1 + v.prime() * gen::uniform(rng, 0, 5)), pk);
          x1 = Rational(pt.x1());
        }
        CHECK(verify_escape(F, v, x0, x1, 10, 0.1));
      }
    }
  }
}

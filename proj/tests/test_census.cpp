#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "dynheight/census.hpp"
#include "dynheight/errors.hpp"
#include "dynheight/maps.hpp"
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
HomogeneousLift z_squared_minus_one() { return HomogeneousLift(form({-1, 0, 1}), form({1, 0, 0})); }
HomogeneousLift three_z_squared() { return HomogeneousLift(form({0, 0, 3}), form({1, 0, 0})); }

std::set<std::string> point_set(const PreperiodicReport& r) {
  std::set<std::string> out;
  for (const auto& rec : r.points) out.insert(rec.start.to_string());
  return out;
}

std::set<std::string> names(std::initializer_list<ProjPoint> pts) {
  std::set<std::string> out;
  for (const auto& p : pts) out.insert(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("orbit examples") {
  auto r = orbit(z_squared(), ProjPoint(-1, 1));
  CHECK(r.status == OrbitStatus::preperiodic);
  CHECK(r.tail == 1);
  CHECK(r.cycle == 1);

  r = orbit(z_squared_minus_one(), ProjPoint(0, 1));
  CHECK(r.status == OrbitStatus::preperiodic);
  CHECK(r.tail == 0);
  CHECK(r.cycle == 2);

  r = orbit(z_squared(), ProjPoint(2, 1));
  CHECK(r.status == OrbitStatus::escaped);
  CHECK(r.escape_certified);

  CHECK_THROWS_AS(orbit(z_squared(), ProjPoint(2, 1), 0), InvalidInput);
}

TEST_CASE("orbit budget and supplied height bound") {
  auto r = orbit(z_squared(), ProjPoint(2, 1), 1, 100.0);
  CHECK(r.status == OrbitStatus::undecided);
  CHECK(r.escape_certified);
  r = orbit(z_squared(), ProjPoint(2, 1), 100, 0.0);
  CHECK(r.status == OrbitStatus::escaped);
  CHECK_FALSE(r.escape_certified);
}

TEST_CASE("escape size bounds every preperiodic point") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto F = gen::random_map(rng, 2 + trial % 2, 4);
    const Integer N = escape_size(F);
    CHECK(N >= 1);
    CHECK(std::log(N.get_d()) <= escape_height(F) + 1e-12);
    // Any preperiodic point found with a larger ad hoc limit stays inside N.
    for (const auto& x : enumerate_box(Integer(6))) {
      const auto r = orbit(F, x, 200, 40.0);
      if (r.status == OrbitStatus::preperiodic) {
        ProjPoint y = x;
        for (long k = 0; k < r.tail + r.cycle; ++k) {
          CHECK(y.naive_size() <= N);
          y = apply_map(F, y);
        }
      }
    }
  }
}

TEST_CASE("box enumeration") {
  CHECK(box_size(std::log(100.0)) == 100);
  CHECK(box_size(std::log(5.0)) == 5);
  CHECK(box_size(0.0) == 1);
  CHECK_THROWS_AS(box_size(-1.0), InvalidInput);
  CHECK_THROWS_AS(box_size(std::log(6000.0)), InvalidInput);

  const auto one = enumerate_box(Integer(1));
  CHECK(one.size() == 4);

  // Count against a direct gcd sieve.
  const auto pts = enumerate_box(Integer(10));
  long expected = 1;
  for (long b = 1; b <= 10; ++b) {
    for (long a = -10; a <= 10; ++a) {
      if (std::gcd(a, b) == 1) ++expected;
    }
  }
  CHECK(static_cast<long>(pts.size()) == expected);
  CHECK(std::is_sorted(pts.begin(), pts.end(), enumeration_less));
  for (const auto& p : pts) CHECK(p.naive_size() <= 10);
}

TEST_CASE("preperiodic point examples") {
  const std::set<std::string> unit = names({ProjPoint(0, 1), ProjPoint(1, 1), ProjPoint(-1, 1), ProjPoint::infinity()});
  CHECK(point_set(preperiodic_points(z_squared(), std::log(5.0))) == unit);
  CHECK(point_set(preperiodic_points(z_squared_minus_one(), std::log(5.0))) == unit);
  CHECK(point_set(preperiodic_points(three_z_squared(), std::log(5.0))) ==
        names({ProjPoint(0, 1), ProjPoint(1, 3), ProjPoint(-1, 3), ProjPoint::infinity()}));
}

TEST_CASE("monomial and z^2-1 have exactly four rational preperiodic points") {
  for (const auto& F : {z_squared(), z_squared_minus_one()}) {
    const auto r = preperiodic_points(F, std::log(100.0));
    CHECK(r.points.size() == 4);
    CHECK(r.complete);
    CHECK(r.undecided == 0);
    for (const auto& rec : r.points) CHECK(verify_cycle(F, rec.start, rec.tail, rec.cycle));
  }
  for (double B : {0.0, 0.5, 2.0}) CHECK(preperiodic_points(z_squared(), B).points.size() == 4);
}

TEST_CASE("preperiodic points carry zero canonical height") {
  gen::Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto F = gen::random_map(rng, 2, 3);
    const auto r = preperiodic_points(F, std::log(8.0));
    std::set<std::string> pre = point_set(r);
    for (const auto& x : enumerate_box(Integer(8))) {
      const auto h = canonical_height(F, x, 30).total;
      if (pre.count(x.to_string())) {
        CHECK(std::fabs(h.value) <= h.err);
      } else if (h.value > h.err) {
        CHECK(pre.count(x.to_string()) == 0);
      }
    }
  }
}

TEST_CASE("preperiodic sets are conjugation equivariant") {
  gen::Rng rng(41);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 8; ++trial) {
    const auto F = trial % 2 ? z_squared_minus_one() : gen::random_map(rng, 2, 3);
    const Mobius phi = gen::random_unimodular(rng, 2, 1);
    const auto G = conjugate(F, phi);
    const Integer NF = escape_size(F), NG = escape_size(G);
    if (NF > 300 || NG > 300) continue;
    const auto rf = preperiodic_points(F, std::log(NF.get_d()));
    const auto rg = preperiodic_points(G, std::log(NG.get_d()));
    REQUIRE(rf.complete);
    REQUIRE(rg.complete);
    std::set<std::string> pushed;
    for (const auto& rec : rf.points) pushed.insert(phi.apply(rec.start).to_string());
    CHECK(pushed == point_set(rg));
    ++tested;
  }
  CHECK(tested >= 4);
}

TEST_CASE("census examples") {
  auto c = small_height_census(z_squared(), 0.5, std::log(5.0));
  CHECK(c.count >= 4);
  CHECK(c.s == 1);
  REQUIRE(c.moduli_height.has_value());

  c = small_height_census(z_squared_minus_one(), 0.0, std::log(5.0));
  std::set<std::string> counted;
  for (const auto& p : c.points) {
    if (p.counted) counted.insert(p.point.to_string());
  }
  CHECK(counted == point_set(preperiodic_points(z_squared_minus_one(), std::log(5.0))));
  CHECK(c.borderline == 0);
  REQUIRE(c.energy.has_value());
  REQUIRE(c.energy->identity.has_value());
  CHECK(c.energy->identity->passed());
}

TEST_CASE("census count agrees with a brute-force recount") {
  const HomogeneousLift F(form({1, 0, 2}), form({2, 0, 0}));
  const auto c = small_height_census(F, 0.1, std::log(10.0));
  const int n = 14;
  const double slack = height_difference_bound(F) / std::pow(2.0, n) + 1e-9;
  long lo = 0, hi = 0;
  for (const auto& p : c.points) {
    const double h = oracle::iterated_height(F, p.point, n);
    if (h + slack <= c.threshold) ++lo;
    if (h - slack <= c.threshold) ++hi;
    CHECK(std::fabs(h - p.hhat.value) <= slack + p.hhat.err);
  }
  CHECK(c.count >= lo);
  CHECK(c.count <= hi);
  CHECK(c.count == static_cast<long>(std::count_if(c.points.begin(), c.points.end(),
                                                   [](const CensusPoint& p) { return p.counted; })));
}

TEST_CASE("census is independent of thread count") {
  const auto F = z_squared_minus_one();
  const auto a = small_height_census(F, 0.2, std::log(12.0), 30, 1);
  const auto b = small_height_census(F, 0.2, std::log(12.0), 30, 4);
  CHECK(census_csv(a) == census_csv(b));
  CHECK(census_svg(a) == census_svg(b));
  CHECK(a.count == b.count);
}

TEST_CASE("census csv layout") {
  const auto c = small_height_census(z_squared(), 0.0, 0.0);
  const std::string csv = census_csv(c);
  CHECK(csv.rfind("point,weil_h,hhat,hhat_err,preperiodic,tail,cycle\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("[-1:1],0,0,0,true,1,1") != std::string::npos);
  const std::string svg = census_svg(c);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 5);
}

TEST_CASE("height gap probe") {
  auto g = height_gap_probe(z_squared(), std::log(3.0));
  CHECK(g.hhat.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(g.witness.naive_size() == 2);
  CHECK(g.s == 1);

  g = height_gap_probe(z_squared_minus_one(), std::log(3.0));
  CHECK(g.lower > 0);
  CHECK(g.hhat.value >= g.hhat.err);

  CHECK_THROWS_AS(height_gap_probe(z_squared(), 0.0), Refused);
}

TEST_CASE("energy examples") {
  auto e = energy_sum(z_squared(), {ProjPoint(2, 1), ProjPoint(3, 1)}, std::nullopt, 30);
  CHECK(std::fabs(e.sums.ordered.value - 2 * std::log(6.0)) <= e.sums.ordered.err + 1e-12);
  CHECK(std::fabs(e.sums.unordered.value - std::log(6.0)) <= e.sums.unordered.err + 1e-12);
  REQUIRE(e.identity.has_value());
  CHECK(e.identity->passed());

  e = energy_sum(z_squared(), {ProjPoint(0, 1), ProjPoint::infinity(), ProjPoint(1, 1)}, std::nullopt, 30);
  CHECK(std::fabs(e.sums.ordered.value) <= e.sums.ordered.err);
  CHECK(e.n_log_n == doctest::Approx(3 * std::log(3.0)));

  CHECK_THROWS_AS(energy_sum(z_squared(), {ProjPoint(2, 1), ProjPoint(2, 1)}, std::nullopt, 30), InvalidInput);

  gen::Rng rng(5);
  std::vector<ProjPoint> pts;
  std::set<std::string> seen;
  while (pts.size() < 5) {
    const auto x = gen::random_point(rng);
    if (seen.insert(x.to_string()).second) pts.push_back(x);
  }
  const auto inf = energy_sum(z_squared_minus_one(), pts, Place::archimedean(), 30);
  CHECK(std::isfinite(inf.sums.ordered.value));
  CHECK_FALSE(inf.identity.has_value());
  const auto all = energy_sum(z_squared_minus_one(), pts, std::nullopt, 30, 3);
  REQUIRE(all.identity.has_value());
  CHECK(all.identity->passed());
}

TEST_CASE("comparison table") {
  CHECK(comparison_scatter({}).rows.empty());

  auto t = comparison_scatter({z_squared()});
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].milnor.sigma1 == 2);
  CHECK(t.rows[0].milnor.sigma2 == 0);
  CHECK(t.rows[0].hres_finite.value == 0.0);
  CHECK_FALSE(t.rows[0].contradiction);

  t = comparison_scatter({z_squared_minus_one()});
  CHECK(t.rows[0].hres_finite.value == 0.0);

  CHECK_THROWS_AS(comparison_scatter({HomogeneousLift(form({0, 0, 0, 1}), form({1, 0, 0, 0}))}), UnsupportedDegree);

  gen::Rng rng(3);
  std::vector<HomogeneousLift> maps;
  for (int i = 0; i < 15; ++i) maps.push_back(gen::random_map(rng, 2, 6));
  t = comparison_scatter(maps);
  CHECK(t.rows.size() == maps.size());
  CHECK(t.local_B >= 0);
  CHECK(t.global_D >= 0);
  for (const auto& row : t.rows) {
    CHECK(row.hres_total.value <= t.global_C * row.milnor.moduli_height.value + t.global_D + 1e-12);
    for (const auto& p : row.places) {
      CHECK(p.log_plus_moduli.value <= t.local_A * p.neg_log_res.value + t.local_B + 1e-12);
      if (!p.v.is_archimedean() && p.neg_log_res.value == 0.0) CHECK(p.log_plus_moduli.value == 0.0);
    }
  }
}

#include "dynheight/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "dynheight/errors.hpp"
#include "dynheight/hash.hpp"
#include "dynheight/local_heights.hpp"
#include "dynheight/maps.hpp"
#include "dynheight/parallel.hpp"
#include "dynheight/resultant.hpp"

namespace dynheight {

namespace {

constexpr long kMaxBox = 5000;

ProjPoint step(const HomogeneousLift& F, const ProjPoint& x) {
  return ProjPoint(F.P().evaluate(x.x0(), x.x1()), F.Q().evaluate(x.x0(), x.x1()));
}

// floor(exp(B) (1 + 1e-12)) without an upper cap.
Integer size_for_height(double B) {
  if (!(B >= 0) || !std::isfinite(B)) throw InvalidInput("height bound must be a finite number >= 0");
  const double e = std::floor(std::exp(B) * (1.0 + 1e-12));
  if (!std::isfinite(e)) throw InvalidInput("height bound too large");
  Integer n;
  mpz_set_d(n.get_mpz_t(), e);
  return n;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

CertifiedValue log_plus_max(const std::vector<Rational>& xs, const Place& v) {
  if (v.is_archimedean()) {
    Rational m = 1;
    for (const auto& x : xs) m = std::max(m, Rational(abs(x)));
    return log_abs(m, v);
  }
  long worst = 0;
  for (const auto& x : xs) {
    if (x != 0) worst = std::max(worst, -valuation(x, v.prime()));
  }
  return rational_times_log(Rational(worst), v.prime());
}

}  // namespace

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::preperiodic:
      return "preperiodic";
    case OrbitStatus::escaped:
      return "escaped";
    case OrbitStatus::undecided:
      return "undecided";
  }
  return "undecided";
}

Integer escape_size(const HomogeneousLift& F) {
  const HomogeneousLift F0 = F.normalized();
  const Integer two_a = 2 * cofactor_bound(cofactor_forms(F0.P(), F0.Q()));
  Integer root;
  mpz_root(root.get_mpz_t(), two_a.get_mpz_t(), static_cast<unsigned long>(F0.degree() - 1));
  return root;
}

double escape_height(const HomogeneousLift& F) {
  const HomogeneousLift F0 = F.normalized();
  const Integer two_a = 2 * cofactor_bound(cofactor_forms(F0.P(), F0.Q()));
  const Interval h = Interval::log_of(two_a, 128) * Interval::point(Rational(1, F0.degree() - 1), 128);
  return h.upper();
}

OrbitRecord orbit(const HomogeneousLift& F, const ProjPoint& x, long budget, std::optional<double> height_bound) {
  if (budget < 1) throw InvalidInput("orbit budget must be at least 1");
  OrbitRecord rec;
  rec.start = x;
  const Integer certified = escape_size(F);
  rec.escape_size = height_bound ? size_for_height(*height_bound) : certified;
  rec.escape_certified = rec.escape_size >= certified;

  std::unordered_map<ProjPoint, long, ProjPointHash> seen;
  ProjPoint cur = x;
  for (long k = 0; k <= budget; ++k) {
    if (cur.naive_size() > rec.escape_size) {
      rec.status = OrbitStatus::escaped;
      rec.steps = k;
      return rec;
    }
    const auto it = seen.find(cur);
    if (it != seen.end()) {
      rec.status = OrbitStatus::preperiodic;
      rec.tail = it->second;
      rec.cycle = k - it->second;
      rec.steps = k;
      return rec;
    }
    if (k == budget) break;
    seen.emplace(cur, k);
    cur = step(F, cur);
  }
  rec.status = OrbitStatus::undecided;
  rec.steps = budget;
  return rec;
}

bool verify_cycle(const HomogeneousLift& F, const ProjPoint& x, long tail, long cycle) {
  if (tail < 0 || cycle < 1) return false;
  ProjPoint a = x;
  for (long k = 0; k < tail; ++k) a = apply_map(F, a);
  ProjPoint b = a;
  for (long k = 0; k < cycle; ++k) b = apply_map(F, b);
  return a == b;
}

Integer box_size(double B) {
  const Integer n = size_for_height(B);
  if (n > kMaxBox) throw InvalidInput("search box larger than " + std::to_string(kMaxBox));
  return n;
}

std::vector<ProjPoint> enumerate_box(const Integer& N) {
  std::vector<ProjPoint> out;
  if (N < 1) return out;
  const long n = N.get_si();
  out.push_back(ProjPoint::infinity());
  for (long b = 1; b <= n; ++b) {
    for (long a = -n; a <= n; ++a) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

PreperiodicReport preperiodic_points(const HomogeneousLift& F, double B, int threads, long budget) {
  PreperiodicReport report;
  report.search_bound = B;
  report.box_size = box_size(B);
  report.escape_height = escape_height(F);
  report.complete = report.box_size >= escape_size(F);
  const auto pts = enumerate_box(report.box_size);
  const auto records = parallel_map(pts.size(), threads, [&](std::size_t i) { return orbit(F, pts[i], budget); });
  for (const auto& r : records) {
    if (r.status == OrbitStatus::undecided) ++report.undecided;
    if (r.status != OrbitStatus::preperiodic) continue;
    if (!verify_cycle(F, r.start, r.tail, r.cycle)) throw std::logic_error("cycle certificate failed to verify");
    report.points.push_back(r);
  }
  return report;
}

CensusReport small_height_census(const HomogeneousLift& F, double t_fraction, double B, int n_iter, int threads) {
  if (!(t_fraction >= 0) || !std::isfinite(t_fraction)) throw InvalidInput("t-fraction must be >= 0");
  CensusReport rep;
  rep.map_id = map_id(F);
  rep.degree = F.degree();
  rep.hres = h_res(F);
  rep.s = rep.hres.report.s;
  rep.t_fraction = t_fraction;
  rep.threshold = t_fraction * rep.hres.total.value / static_cast<double>(rep.s);
  if (F.degree() == 2) {
    rep.moduli_height = milnor_invariants(F).moduli_height;
    rep.moduli_threshold = t_fraction * rep.moduli_height->value / static_cast<double>(rep.s);
    rep.moduli_count = 0;
  }
  rep.search_bound = B;
  rep.box_size = box_size(B);
  rep.complete = rep.box_size >= escape_size(F);
  rep.s_log_s = static_cast<double>(rep.s) * std::log(static_cast<double>(rep.s));

  const auto pts = enumerate_box(rep.box_size);
  rep.points = parallel_map(pts.size(), threads, [&](std::size_t i) {
    CensusPoint cp;
    cp.point = pts[i];
    cp.weil = weil_height(pts[i]);
    cp.orbit = orbit(F, pts[i]);
    // A verified cycle gives h = 0 exactly.
    cp.hhat = cp.orbit.status == OrbitStatus::preperiodic ? CertifiedValue::zero()
                                                          : canonical_height(F, pts[i], n_iter).total;
    return cp;
  });
  std::vector<ProjPoint> counted;
  for (auto& cp : rep.points) {
    cp.counted = cp.hhat.lower() <= rep.threshold;
    cp.borderline = cp.counted && cp.hhat.upper() > rep.threshold;
    if (cp.counted) {
      ++rep.count;
      counted.push_back(cp.point);
    }
    if (cp.borderline) ++rep.borderline;
    if (rep.moduli_threshold) {
      cp.counted_moduli = cp.hhat.lower() <= *rep.moduli_threshold;
      if (cp.counted_moduli) ++*rep.moduli_count;
    }
  }
  if (counted.size() >= 2 && counted.size() <= kCensusEnergyLimit) {
    rep.energy = energy_sum(F, counted, std::nullopt, n_iter, threads);
  }
  return rep;
}

GapProbe height_gap_probe(const HomogeneousLift& F, double B, int n_iter, int threads) {
  const auto pts = enumerate_box(box_size(B));
  if (pts.empty()) throw Refused("empty search box");
  struct Item {
    bool candidate = false;
    CertifiedValue h;
  };
  const auto items = parallel_map(pts.size(), threads, [&](std::size_t i) {
    Item it;
    if (orbit(F, pts[i]).status != OrbitStatus::escaped) return it;
    it.candidate = true;
    it.h = canonical_height(F, pts[i], n_iter).total;
    return it;
  });
  GapProbe g;
  g.searched = pts.size();
  bool found = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!items[i].candidate) continue;
    const double lower = items[i].h.lower();
    if (!found || lower < g.lower) {
      found = true;
      g.lower = lower;
      g.hhat = items[i].h;
      g.witness = pts[i];
    }
  }
  if (!found) throw Refused("no point in the search box is certified non-preperiodic");
  const auto hr = h_res(F);
  g.hres_total = hr.total;
  g.s = hr.report.s;
  const double sls = static_cast<double>(g.s) * std::log(static_cast<double>(g.s));
  g.reference = hr.total.value / std::pow(static_cast<double>(F.degree()), sls);
  return g;
}

EnergyReport energy_sum(const HomogeneousLift& F, const std::vector<ProjPoint>& points,
                        const std::optional<Place>& v, int n_iter, int threads) {
  {
    std::set<std::pair<Integer, Integer>> distinct;
    for (const auto& x : points) {
      if (!distinct.emplace(x.x0(), x.x1()).second) throw InvalidInput("repeated point " + x.to_string());
    }
  }
  EnergyReport rep;
  rep.n_points = points.size();
  rep.place = v ? v->to_string() : "all";
  const std::size_t n = points.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto values = parallel_map(pairs.size(), threads, [&](std::size_t k) {
    const auto& x = points[pairs[k].first];
    const auto& y = points[pairs[k].second];
    if (v) return green_pairing(F, x, y, *v, n_iter);
    CertifiedValue sum = CertifiedValue::zero();
    for (const auto& w : pairing_places(F, x, y)) sum += green_pairing(F, x, y, w, n_iter);
    return sum;
  });
  CertifiedValue total = CertifiedValue::zero();
  for (const auto& g : values) total += g;
  rep.sums.unordered = total;
  rep.sums.ordered = total.scaled(2.0);
  rep.n_log_n = n > 0 ? static_cast<double>(n) * std::log(static_cast<double>(n)) : 0.0;
  if (!v) {
    const auto heights = parallel_map(n, threads, [&](std::size_t i) {
      return canonical_height(F, points[i], n_iter).total;
    });
    CertifiedValue hs = CertifiedValue::zero();
    for (const auto& h : heights) hs += h;
    rep.height_sum = hs;
    const double m = n > 0 ? static_cast<double>(n - 1) : 0.0;
    rep.expected_ordered = hs.scaled(2.0 * m);
    rep.expected_unordered = hs.scaled(m);
    const CertifiedValue diff = rep.sums.ordered - *rep.expected_ordered;
    rep.identity = CheckResult{std::fabs(diff.value), diff.err};
  }
  return rep;
}

ComparisonTable comparison_scatter(const std::vector<HomogeneousLift>& maps) {
  ComparisonTable table;
  for (const auto& F : maps) {
    if (F.degree() != 2) {
      throw UnsupportedDegree("comparison table needs quadratic maps (got d = " + std::to_string(F.degree()) + ")");
    }
  }
  for (const auto& F : maps) {
    ComparisonRow row{map_id(F), F.normalized(), milnor_invariants(F), {}, {}, {}, false};
    const auto hr = h_res(F);
    row.hres_finite = hr.finite_part;
    row.hres_total = hr.total;
    const std::vector<Rational> sig{row.milnor.sigma1, row.milnor.sigma2};
    std::set<Integer> primes;
    for (const auto& c : hr.report.certificates) primes.insert(c.p);
    for (const auto& s : sig) {
      for (const auto& p : prime_divisors(Integer(s.get_den()))) primes.insert(p);
    }
    row.places.push_back({Place::archimedean(), hr.archimedean_part, log_plus_max(sig, Place::archimedean())});
    for (const auto& p : primes) {
      long ord = 0;
      for (const auto& c : hr.report.certificates) {
        if (c.p == p) ord = c.ord_min;
      }
      const Place v = Place::finite(p);
      ComparisonPlace cp{v, rational_times_log(Rational(ord), p), log_plus_max(sig, v)};
      if (ord == 0 && cp.log_plus_moduli.value > 0) row.contradiction = true;
      row.places.push_back(cp);
    }
    for (const auto& cp : row.places) {
      table.local_B = std::max(table.local_B, cp.log_plus_moduli.upper() - cp.neg_log_res.lower());
    }
    table.global_D = std::max(table.global_D, row.hres_total.upper() - row.milnor.moduli_height.lower());
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "point,weil_h,hhat,hhat_err,preperiodic,tail,cycle\n";
  for (const auto& cp : report.points) {
    const bool pre = cp.orbit.status == OrbitStatus::preperiodic;
    out << cp.point.to_string() << ',' << fmt(cp.weil.value) << ',' << fmt(cp.hhat.value) << ','
        << fmt(cp.hhat.err) << ',' << (pre ? "true" : "false") << ',';
    if (pre) {
      out << cp.orbit.tail << ',' << cp.orbit.cycle;
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string census_svg(const CensusReport& report) {
  const double width = 640, height = 480, margin = 56;
  double xmax = 1e-9, ymax = 1e-9;
  for (const auto& cp : report.points) {
    xmax = std::max(xmax, cp.weil.value);
    ymax = std::max(ymax, cp.hhat.value);
  }
  xmax *= 1.05;
  ymax = std::max(ymax * 1.05, xmax * 0.25);
  auto sx = [&](double x) { return margin + x / xmax * (width - 2 * margin); };
  auto sy = [&](double y) { return height - margin - y / ymax * (height - 2 * margin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">canonical vs Weil height, map "
      << report.map_id << "</text>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  const double diag = std::min(xmax, ymax);
  out << "<line x1=\"" << fmt3(sx(0)) << "\" y1=\"" << fmt3(sy(0)) << "\" x2=\"" << fmt3(sx(diag)) << "\" y2=\""
      << fmt3(sy(diag)) << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmax * k / 4, yv = ymax * k / 4;
    out << "<text x=\"" << fmt3(sx(xv)) << "\" y=\"" << height - margin + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt3(xv) << "</text>\n";
    out << "<text x=\"" << margin - 6 << "\" y=\"" << fmt3(sy(yv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt3(yv) << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">Weil height h(x)</text>\n";
  out << "<text x=\"16\" y=\"" << height / 2 << "\" transform=\"rotate(-90 16 " << height / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">canonical height</text>\n";
  if (report.threshold > 0 && report.threshold < ymax) {
    out << "<line x1=\"" << margin << "\" y1=\"" << fmt3(sy(report.threshold)) << "\" x2=\"" << width - margin
        << "\" y2=\"" << fmt3(sy(report.threshold)) << "\" stroke=\"#d62728\" stroke-dasharray=\"2 3\"/>\n";
  }
  for (const auto& cp : report.points) {
    const bool pre = cp.orbit.status == OrbitStatus::preperiodic;
    out << "<circle cx=\"" << fmt3(sx(cp.weil.value)) << "\" cy=\"" << fmt3(sy(cp.hhat.value)) << "\" r=\""
        << (pre ? 4 : 2) << "\" fill=\"" << (pre ? "#d62728" : "#1f77b4") << "\"><title>" << cp.point.to_string()
        << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dynheight

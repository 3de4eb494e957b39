#pragma once

// Orbits, preperiodic points, small-height census, height-gap probe, pair
// energies and the quadratic comparison table.

#include <optional>
#include <string>
#include <vector>

#include "dynheight/canonical.hpp"
#include "dynheight/certified.hpp"
#include "dynheight/lift.hpp"
#include "dynheight/milnor.hpp"
#include "dynheight/place.hpp"
#include "dynheight/point.hpp"
#include "dynheight/reduction.hpp"

namespace dynheight {

enum class OrbitStatus { preperiodic, escaped, undecided };

std::string to_string(OrbitStatus s);

struct OrbitRecord {
  ProjPoint start = ProjPoint::infinity();
  OrbitStatus status = OrbitStatus::undecided;
  long tail = 0;
  long cycle = 0;
  long steps = 0;
  /// Naive size beyond which the orbit is declared escaped.
  Integer escape_size;
  /// True when escape_size comes from the map's own bound, so "escaped"
  /// proves the point is not preperiodic.
  bool escape_certified = true;
};

/// Largest max(|x0|,|x1|) a preperiodic Q-point of f can have:
/// floor((2A')^(1/(d-1))) for the primitive lift.
Integer escape_size(const HomogeneousLift& F);

/// log(escape_size) as a double rounded up.
double escape_height(const HomogeneousLift& F);

/// Exact iteration with cycle detection. Escape is declared when the naive
/// size exceeds escape_size(F), or exp(height_bound) when a bound is given.
OrbitRecord orbit(const HomogeneousLift& F, const ProjPoint& x, long budget = 10000,
                  std::optional<double> height_bound = std::nullopt);

/// Fresh check that f^(tail+cycle)(x) = f^tail(x) with cycle >= 1.
bool verify_cycle(const HomogeneousLift& F, const ProjPoint& x, long tail, long cycle);

/// Largest naive size N with log N <= B (up to a relative slack of 1e-12 so
/// that B = log 100 admits 100). Throws InvalidInput when B < 0 or the box
/// would exceed 5000.
Integer box_size(double B);

/// Every canonical point with max(|x0|,|x1|) <= N, in enumeration order.
std::vector<ProjPoint> enumerate_box(const Integer& N);

struct PreperiodicReport {
  double search_bound = 0.0;
  Integer box_size;
  double escape_height = 0.0;
  /// The box contains every point below the escape height, so the list is
  /// the full set of Q-rational preperiodic points.
  bool complete = false;
  std::vector<OrbitRecord> points;
  long undecided = 0;
};

PreperiodicReport preperiodic_points(const HomogeneousLift& F, double B, int threads = 1, long budget = 10000);

struct CensusPoint {
  ProjPoint point = ProjPoint::infinity();
  CertifiedValue weil;
  CertifiedValue hhat;
  OrbitRecord orbit;
  bool counted = false;
  bool borderline = false;
  bool counted_moduli = false;
};

struct PairSums {
  CertifiedValue unordered;
  CertifiedValue ordered;
};

struct EnergyReport {
  std::size_t n_points = 0;
  std::string place;  // "inf", a prime, or "all"
  PairSums sums;
  double n_log_n = 0.0;
  /// Only for place = all: sum of canonical heights and the identity check.
  std::optional<CertifiedValue> height_sum;
  std::optional<CertifiedValue> expected_ordered;    // 2(N-1) sum h
  std::optional<CertifiedValue> expected_unordered;  // (N-1) sum h
  std::optional<CheckResult> identity;
};

struct CensusReport {
  std::string map_id;
  int degree = 0;
  long s = 1;
  ResultantHeight hres;
  double t_fraction = 0.0;
  double threshold = 0.0;
  std::optional<CertifiedValue> moduli_height;
  std::optional<double> moduli_threshold;
  double search_bound = 0.0;
  Integer box_size;
  bool complete = false;
  long count = 0;
  long borderline = 0;
  std::optional<long> moduli_count;
  double s_log_s = 0.0;
  std::vector<CensusPoint> points;
  std::optional<EnergyReport> energy;
};

/// Largest number of counted points for which pair energies are tabulated.
inline constexpr std::size_t kCensusEnergyLimit = 40;

CensusReport small_height_census(const HomogeneousLift& F, double t_fraction, double B,
                                 int n_iter = kDefaultIterations, int threads = 1);

struct GapProbe {
  CertifiedValue hhat;
  double lower = 0.0;  // hhat - err
  ProjPoint witness = ProjPoint::infinity();
  std::size_t searched = 0;
  CertifiedValue hres_total;
  long s = 1;
  /// h_res / d^(s log s), for context only.
  double reference = 0.0;
};

/// Smallest certified positive canonical height on the box. Throws Refused
/// when the box holds no point that is certified non-preperiodic.
GapProbe height_gap_probe(const HomogeneousLift& F, double B, int n_iter = kDefaultIterations, int threads = 1);

/// Pair sums of g_{f,v} over distinct points; place std::nullopt means all
/// places. Throws InvalidInput on repeated points.
EnergyReport energy_sum(const HomogeneousLift& F, const std::vector<ProjPoint>& points,
                        const std::optional<Place>& v, int n_iter = kDefaultIterations, int threads = 1);

struct ComparisonPlace {
  Place v = Place::archimedean();
  /// -log|res(f)|_v (finite places: ord_min log p; infinity: the flagged
  /// archimedean h_res term).
  CertifiedValue neg_log_res;
  /// log+ max(|sigma1|_v, |sigma2|_v, 1).
  CertifiedValue log_plus_moduli;
};

struct ComparisonRow {
  std::string map_id;
  HomogeneousLift map;
  MilnorInvariants milnor;
  CertifiedValue hres_finite;
  CertifiedValue hres_total;
  std::vector<ComparisonPlace> places;
  /// A finite place with good reduction but a non-integral moduli point.
  bool contradiction = false;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  /// A log+|<f>|_v <= A (-log|res|_v) + B holds row-wise with A = 1.
  double local_A = 1.0;
  double local_B = 0.0;
  /// h_res <= C h(<f>) + D holds row-wise with C = 1.
  double global_C = 1.0;
  double global_D = 0.0;
};

/// Throws UnsupportedDegree when a map is not quadratic.
ComparisonTable comparison_scatter(const std::vector<HomogeneousLift>& maps);

/// CSV with columns point, weil_h, hhat, hhat_err, preperiodic, tail, cycle.
std::string census_csv(const CensusReport& report);

/// Scatter of canonical against Weil height as a standalone SVG document.
std::string census_svg(const CensusReport& report);

}  // namespace dynheight

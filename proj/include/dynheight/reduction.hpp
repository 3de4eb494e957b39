#pragma once

// Minimal resultants and places of bad reduction.

#include <string>
#include <utility>
#include <vector>

#include "dynheight/certified.hpp"
#include "dynheight/lift.hpp"
#include "dynheight/mobius.hpp"

namespace dynheight {

enum class MinResMethod { descent, oracle };

std::string to_string(MinResMethod m);

struct MinResCertificate {
  Integer p;
  long ord_start = 0;
  long ord_min = 0;
  Mobius conjugator = Mobius::identity();
  MinResMethod method = MinResMethod::descent;
  /// False when the descent hit its depth cap; ord_min is then only the best
  /// value found.
  bool stabilized = true;
  long steps = 0;
};

/// ord_p of the normalized resultant of phi o f o phi^-1.
long ord_res_at(const HomogeneousLift& F, const Integer& p, const Mobius& phi);

/// The p + 1 elementary moves [[p, j], [0, 1]] (j = 0..p-1) and [[1, 0], [0, p]].
/// A move E replaces g by E^-1 o g o E (the substitution z = E(w)); the p + 1
/// results are the neighbours of the current vertex of the tree at p.
std::vector<Mobius> elementary_moves(const Integer& p);

/// Greedy descent over the conjugation tree at p. Each step moves from phi
/// to E^-1 * phi for the elementary move E giving the smallest ordinal (ties by
/// lexicographic order of the primitive matrix), stopping when nothing
/// improves or after 4 ord_start + 4 steps.
MinResCertificate minimal_resultant_ord(const HomogeneousLift& F, const Integer& p);

/// Exhaustive minimum of ord_res_at over products of at most `radius`
/// elementary moves and their inverses. Throws Refused for radius > 6.
long minimal_resultant_oracle(const HomogeneousLift& F, const Integer& p, int radius,
                              Mobius* witness = nullptr);

struct BadReductionReport {
  std::vector<std::pair<Integer, long>> bad_primes;  // (p, ord_min), ordered by p
  bool includes_archimedean = true;
  long s = 1;
  std::vector<MinResCertificate> certificates;  // one per candidate prime
  bool warning = false;                         // some descent did not stabilize
};

BadReductionReport bad_places(const HomogeneousLift& F);

struct ResultantHeight {
  CertifiedValue finite_part;
  /// max(0, -log |res(f)|_inf) using the best conjugator found; an upper
  /// bound for the true value.
  CertifiedValue archimedean_part;
  bool archimedean_upper_bound_only = true;
  Mobius archimedean_conjugator = Mobius::identity();
  int archimedean_radius = 0;
  CertifiedValue total;
  BadReductionReport report;
};

/// Radius of the archimedean search (moves at p = 2).
inline constexpr int kArchimedeanSearchRadius = 3;

ResultantHeight h_res(const HomogeneousLift& F);

}  // namespace dynheight

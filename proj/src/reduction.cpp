#include "dynheight/reduction.hpp"

#include <set>

#include "dynheight/errors.hpp"
#include "dynheight/maps.hpp"
#include "dynheight/place.hpp"

namespace dynheight {

namespace {

using MatrixKey = std::array<Integer, 4>;

Mobius from_key(const MatrixKey& k) { return Mobius(k[0], k[1], k[2], k[3]); }

// Visits every conjugator reachable by at most `radius` moves or inverse
// moves, once per action, in breadth-first order. The visitor receives the
// conjugated (content-normalized) lift.
template <typename Visit>
void enumerate_ball(const HomogeneousLift& F, const Integer& p, int radius, Visit&& visit) {
  std::vector<Mobius> gens = elementary_moves(p);
  const std::size_t forward = gens.size();
  for (std::size_t i = 0; i < forward; ++i) gens.push_back(gens[i].inverse());

  std::set<MatrixKey> seen;
  std::vector<std::pair<Mobius, HomogeneousLift>> frontier;
  const Mobius id = Mobius::identity();
  seen.insert(id.primitive_integer());
  frontier.emplace_back(id, F);
  visit(id, F);
  for (int level = 0; level < radius; ++level) {
    std::vector<std::pair<Mobius, HomogeneousLift>> next;
    for (const auto& [phi, G] : frontier) {
      for (const auto& g : gens) {
        const MatrixKey key = (g * phi).primitive_integer();
        if (!seen.insert(key).second) continue;
        const Mobius psi = from_key(key);
        HomogeneousLift H = conjugate(G, g);
        visit(psi, H);
        next.emplace_back(psi, std::move(H));
      }
    }
    frontier = std::move(next);
  }
}

bool better(long ord, const Mobius& phi, long best_ord, const Mobius& best) {
  if (ord != best_ord) return ord < best_ord;
  return lexicographic_less(phi, best);
}

// |Res|/max|coeff|^(2d) at the archimedean place as an exact rational.
Rational archimedean_normalized_resultant(const HomogeneousLift& F) {
  Integer den;
  const Integer m = F.max_abs_coefficient();
  mpz_pow_ui(den.get_mpz_t(), m.get_mpz_t(), 2 * static_cast<unsigned long>(F.degree()));
  Rational q(Integer(abs(F.resultant())), den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string to_string(MinResMethod m) { return m == MinResMethod::descent ? "descent" : "oracle"; }

long ord_res_at(const HomogeneousLift& F, const Integer& p, const Mobius& phi) {
  return normalized_resultant_ord(conjugate(F, phi), p);
}

std::vector<Mobius> elementary_moves(const Integer& p) {
  std::vector<Mobius> out;
  for (Integer j = 0; j < p; ++j) out.emplace_back(Rational(p), Rational(j), 0, 1);
  out.emplace_back(1, 0, 0, Rational(p));
  return out;
}

MinResCertificate minimal_resultant_ord(const HomogeneousLift& F, const Integer& p) {
  if (!is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
  MinResCertificate cert;
  cert.p = p;
  cert.method = MinResMethod::descent;
  HomogeneousLift current = F.normalized();
  cert.ord_start = normalized_resultant_ord(current, p);
  cert.ord_min = cert.ord_start;
  const long cap = 4 * cert.ord_start + 4;
  const auto moves = elementary_moves(p);

  Mobius phi = Mobius::identity();
  for (;;) {
    if (cert.ord_min == 0) break;
    if (cert.steps >= cap) {
      cert.stabilized = false;
      break;
    }
    bool found = false;
    long best_ord = cert.ord_min;
    Mobius best_phi = phi;
    HomogeneousLift best_lift = current;
    for (const auto& E : moves) {
      const Mobius step = E.inverse();
      HomogeneousLift G = conjugate(current, step);
      const long ord = normalized_resultant_ord(G, p);
      if (ord >= cert.ord_min) continue;
      const Mobius psi = from_key((step * phi).primitive_integer());
      if (!found || better(ord, psi, best_ord, best_phi)) {
        found = true;
        best_ord = ord;
        best_phi = psi;
        best_lift = std::move(G);
      }
    }
    if (!found) break;
    phi = best_phi;
    current = std::move(best_lift);
    cert.ord_min = best_ord;
    ++cert.steps;
  }
  cert.conjugator = phi;
  return cert;
}

long minimal_resultant_oracle(const HomogeneousLift& F, const Integer& p, int radius, Mobius* witness) {
  if (radius < 0) throw InvalidInput("negative oracle radius");
  if (radius > 6) throw Refused("oracle radius " + std::to_string(radius) + " exceeds the limit of 6");
  if (!is_prime(p)) throw InvalidInput(p.get_str() + " is not prime");
  long best = -1;
  Mobius best_phi = Mobius::identity();
  enumerate_ball(F.normalized(), p, radius, [&](const Mobius& phi, const HomogeneousLift& G) {
    const long ord = normalized_resultant_ord(G, p);
    if (best < 0 || better(ord, phi, best, best_phi)) {
      best = ord;
      best_phi = phi;
    }
  });
  if (witness != nullptr) *witness = best_phi;
  return best;
}

BadReductionReport bad_places(const HomogeneousLift& F) {
  const HomogeneousLift G = F.normalized();
  BadReductionReport report;
  for (const auto& p : prime_divisors(abs(G.resultant()))) {
    MinResCertificate cert = minimal_resultant_ord(G, p);
    if (!cert.stabilized) report.warning = true;
    if (cert.ord_min > 0) report.bad_primes.emplace_back(p, cert.ord_min);
    report.certificates.push_back(std::move(cert));
  }
  report.s = static_cast<long>(report.bad_primes.size()) + 1;
  return report;
}

ResultantHeight h_res(const HomogeneousLift& F) {
  ResultantHeight out;
  out.report = bad_places(F);
  out.finite_part = CertifiedValue::zero();
  for (const auto& [p, ord] : out.report.bad_primes) out.finite_part += rational_times_log(Rational(ord), p);

  const HomogeneousLift G = F.normalized();
  Rational best = -1;
  Mobius best_phi = Mobius::identity();
  enumerate_ball(G, Integer(2), kArchimedeanSearchRadius, [&](const Mobius& phi, const HomogeneousLift& H) {
    const Rational q = archimedean_normalized_resultant(H);
    if (q > best || (q == best && lexicographic_less(phi, best_phi))) {
      best = q;
      best_phi = phi;
    }
  });
  out.archimedean_radius = kArchimedeanSearchRadius;
  out.archimedean_conjugator = best_phi;
  if (best >= 1) {
    out.archimedean_part = CertifiedValue::zero();
  } else {
    out.archimedean_part = -log_abs(best, Place::archimedean());
  }
  out.total = out.finite_part + out.archimedean_part;
  return out;
}

}  // namespace dynheight

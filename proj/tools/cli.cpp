#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "dynheight/canonical.hpp"
#include "dynheight/census.hpp"
#include "dynheight/errors.hpp"
#include "dynheight/hash.hpp"
#include "dynheight/local_heights.hpp"
#include "dynheight/milnor.hpp"
#include "dynheight/reduction.hpp"

#ifndef DYNHEIGHT_VERSION
#define DYNHEIGHT_VERSION "0.0.0"
#endif

namespace dynheight::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> maps;
  std::string point;
  std::vector<std::string> points;
  std::string x, y;
  std::string z;
  std::string prime;
  std::string place = "inf";
  int iters = kDefaultIterations;
  double bound = 0.0;
  double t_fraction = 0.1;
  std::string format = "json";
  std::string plot;
  int threads = 0;
  std::string manifest;
  long budget = 10000;
  std::optional<double> orbit_bound;
  int oracle_radius = -1;
  int steps = 10;
  double delta = 0.1;
  std::string replay_file;
};

struct Outcome {
  std::string text;
  int status = kExitOk;
};

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json certified_json(const CertifiedValue& c) { return json{{"value", c.value}, {"err", c.err}, {"exact", c.exact}}; }

json mobius_json(const Mobius& m) {
  const auto e = m.primitive_integer();
  return json::array({json::array({e[0].get_str(), e[1].get_str()}), json::array({e[2].get_str(), e[3].get_str()})});
}

json map_json(const HomogeneousLift& F) {
  json p = json::array(), q = json::array();
  const auto w = F.wire_coefficients();
  const std::size_t half = w.size() / 2;
  for (std::size_t i = 0; i < w.size(); ++i) (i < half ? p : q).push_back(w[i].get_str());
  return json{{"d", F.degree()}, {"P", p}, {"Q", q}};
}

json certificate_json(const MinResCertificate& c) {
  return json{{"p", integer_json(c.p)},         {"ord_start", c.ord_start},
              {"ord_min", c.ord_min},           {"conjugator", mobius_json(c.conjugator)},
              {"method", to_string(c.method)},  {"stabilized", c.stabilized},
              {"steps", c.steps}};
}

json hres_json(const ResultantHeight& h) {
  return json{{"finite", certified_json(h.finite_part)},
              {"archimedean", certified_json(h.archimedean_part)},
              {"archimedean_upper_bound_only", h.archimedean_upper_bound_only},
              {"archimedean_conjugator", mobius_json(h.archimedean_conjugator)},
              {"total", certified_json(h.total)}};
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) throw InvalidInput("bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

Integer parse_integer(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer n;
    const std::string s = v.get<std::string>();
    if (s.empty() || n.set_str(s, 10) != 0) throw InvalidInput("bad integer '" + s + "'");
    return n;
  }
  throw InvalidInput("coefficient must be an integer or a decimal string");
}

HomogeneousLift load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read map file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("map file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("P") || !j.contains("Q")) {
    throw InvalidInput("map file " + path + " needs keys d, P and Q");
  }
  if (!j["d"].is_number_integer()) throw InvalidInput("d must be an integer");
  const long d = j["d"].get<long>();
  if (d < 2) throw InvalidInput("degree must be at least 2");
  std::vector<Integer> p, q;
  for (const auto& c : j["P"]) p.push_back(parse_integer(c));
  for (const auto& c : j["Q"]) q.push_back(parse_integer(c));
  if (static_cast<long>(p.size()) != d + 1 || static_cast<long>(q.size()) != d + 1) {
    throw InvalidInput("P and Q must each list d+1 coefficients");
  }
  return HomogeneousLift::from_wire(p, q);
}

std::optional<Place> parse_place_or_all(const std::string& s) {
  if (s == "all") return std::nullopt;
  return Place::parse(s);
}

int resolved_threads(int t) {
  if (t > 0) return t;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const HomogeneousLift& single_map(const std::vector<HomogeneousLift>& maps) {
  if (maps.size() != 1) throw InvalidInput("exactly one --map is required");
  return maps.front();
}

Outcome cmd_resultant(const Options&, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  return {dump(json{{"res", F.resultant().get_str()}})};
}

Outcome cmd_badplaces(const Options&, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  const auto hr = h_res(F);
  const auto& r = hr.report;
  json bad = json::array();
  for (const auto& [p, ord] : r.bad_primes) bad.push_back(json{{"p", integer_json(p)}, {"ord_min", ord}});
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  json j{{"bad_primes", bad}, {"archimedean", r.includes_archimedean}, {"s", r.s},
         {"certificates", certs}, {"warning", r.warning}, {"h_res", hres_json(hr)}};
  return {dump(j), r.warning ? kExitUncertified : kExitOk};
}

Outcome cmd_minres(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  if (o.prime.empty()) throw InvalidInput("--prime is required");
  const Place v = Place::parse(o.prime);
  if (v.is_archimedean()) throw InvalidInput("--prime must be a prime");
  const auto c = minimal_resultant_ord(F, v.prime());
  json j = certificate_json(c);
  if (o.oracle_radius >= 0) {
    Mobius w = Mobius::identity();
    const long ord = minimal_resultant_oracle(F, v.prime(), o.oracle_radius, &w);
    j["oracle"] = json{{"radius", o.oracle_radius}, {"ord_min", ord}, {"witness", mobius_json(w)}};
  }
  return {dump(j), c.stabilized ? kExitOk : kExitUncertified};
}

Outcome cmd_height(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  if (o.point.empty()) throw InvalidInput("--point is required");
  const ProjPoint x = ProjPoint::parse(o.point);
  const auto h = canonical_height(F, x, o.iters);
  json places = json::array();
  for (const auto& [v, c] : h.per_place) {
    json row = certified_json(c);
    row["place"] = v.to_string();
    places.push_back(row);
  }
  json j{{"point", x.to_string()}, {"weil", certified_json(weil_height(x))}, {"total", certified_json(h.total)},
         {"per_place", places}, {"iters", o.iters}};
  return {dump(j)};
}

Outcome cmd_green(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  if (o.x.empty() || o.y.empty()) throw InvalidInput("--x and --y are required");
  const ProjPoint x = ProjPoint::parse(o.x), y = ProjPoint::parse(o.y);
  const auto v = parse_place_or_all(o.place);
  CertifiedValue g = CertifiedValue::zero();
  if (v) {
    g = green_pairing(F, x, y, *v, o.iters);
  } else {
    for (const auto& w : pairing_places(F, x, y)) g += green_pairing(F, x, y, w, o.iters);
  }
  json j = certified_json(g);
  j["place"] = v ? v->to_string() : "all";
  return {dump(j)};
}

Outcome cmd_escape(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  const Place v = Place::parse(o.place);
  const auto R = escape_radius(F, v);
  json j{{"place", v.to_string()}, {"R", R.R}};
  if (!v.is_archimedean()) j["p_exponent"] = R.p_exponent.get_str();
  int status = kExitOk;
  if (!o.z.empty()) {
    const auto comma = o.z.find(',');
    if (comma == std::string::npos) throw InvalidInput("--z expects two rationals separated by a comma");
    const Rational x0 = parse_rational(o.z.substr(0, comma)), x1 = parse_rational(o.z.substr(comma + 1));
    const bool ok = verify_escape(F, v, x0, x1, o.steps, o.delta);
    j["z"] = json::array({x0.get_str(), x1.get_str()});
    j["verified"] = ok;
    if (!ok) status = kExitUncertified;
  }
  return {dump(j), status};
}

json orbit_json(const OrbitRecord& r) {
  json j{{"status", to_string(r.status)}};
  if (r.status == OrbitStatus::preperiodic) {
    j["tail"] = r.tail;
    j["cycle"] = r.cycle;
  }
  j["start"] = r.start.to_string();
  j["steps"] = r.steps;
  j["escape_size"] = integer_json(r.escape_size);
  j["escape_certified"] = r.escape_certified;
  return j;
}

Outcome cmd_orbit(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  if (o.point.empty()) throw InvalidInput("--point is required");
  const auto r = orbit(F, ProjPoint::parse(o.point), o.budget, o.orbit_bound);
  const bool uncertified = r.status == OrbitStatus::undecided || (r.status == OrbitStatus::escaped && !r.escape_certified);
  return {dump(orbit_json(r)), uncertified ? kExitUncertified : kExitOk};
}

Outcome cmd_preperiodic(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  const auto r = preperiodic_points(F, o.bound, resolved_threads(o.threads), o.budget);
  json pts = json::array();
  for (const auto& rec : r.points) {
    pts.push_back(json{{"point", rec.start.to_string()}, {"tail", rec.tail}, {"cycle", rec.cycle}});
  }
  json j{{"search_bound", r.search_bound}, {"box_size", integer_json(r.box_size)},
         {"escape_height", r.escape_height}, {"complete", r.complete},
         {"count", r.points.size()},         {"points", pts},
         {"undecided", r.undecided}};
  return {dump(j), r.undecided > 0 ? kExitUncertified : kExitOk};
}

json energy_json(const EnergyReport& e) {
  json j{{"n_points", e.n_points},
         {"place", e.place},
         {"ordered", certified_json(e.sums.ordered)},
         {"unordered", certified_json(e.sums.unordered)},
         {"n_log_n", e.n_log_n}};
  if (e.height_sum) {
    j["height_sum"] = certified_json(*e.height_sum);
    j["expected_ordered"] = certified_json(*e.expected_ordered);
    j["expected_unordered"] = certified_json(*e.expected_unordered);
    j["identity"] = json{{"residual", e.identity->residual}, {"err", e.identity->err}, {"passed", e.identity->passed()}};
  }
  return j;
}

Outcome cmd_census(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  if (o.format != "json" && o.format != "csv") throw InvalidInput("--format must be json or csv");
  const auto c = small_height_census(F, o.t_fraction, o.bound, o.iters, resolved_threads(o.threads));
  if (!o.plot.empty()) {
    std::ofstream svg(o.plot);
    if (!svg) throw InvalidInput("cannot write " + o.plot);
    svg << census_svg(c);
  }
  long undecided = 0;
  for (const auto& p : c.points) undecided += p.orbit.status == OrbitStatus::undecided;
  const int status = undecided > 0 ? kExitUncertified : kExitOk;
  if (o.format == "csv") return {census_csv(c), status};

  json pts = json::array();
  for (const auto& p : c.points) {
    json row{{"point", p.point.to_string()}, {"weil", certified_json(p.weil)}, {"hhat", certified_json(p.hhat)},
             {"orbit", to_string(p.orbit.status)}, {"counted", p.counted}, {"borderline", p.borderline}};
    if (p.orbit.status == OrbitStatus::preperiodic) {
      row["tail"] = p.orbit.tail;
      row["cycle"] = p.orbit.cycle;
    }
    if (c.moduli_threshold) row["counted_moduli"] = p.counted_moduli;
    pts.push_back(row);
  }
  json j{{"observational", true},
         {"map_id", c.map_id},
         {"degree", c.degree},
         {"s", c.s},
         {"h_res", hres_json(c.hres)},
         {"t_fraction", c.t_fraction},
         {"threshold", c.threshold}};
  if (c.moduli_height) {
    j["moduli_height"] = certified_json(*c.moduli_height);
    j["moduli_threshold"] = *c.moduli_threshold;
  }
  j["search_bound"] = c.search_bound;
  j["box_size"] = integer_json(c.box_size);
  j["complete"] = c.complete;
  j["count"] = c.count;
  j["borderline"] = c.borderline;
  if (c.moduli_count) j["moduli_count"] = *c.moduli_count;
  j["s_log_s"] = c.s_log_s;
  j["undecided"] = undecided;
  j["points"] = pts;
  j["energy"] = c.energy ? energy_json(*c.energy) : json(nullptr);
  return {dump(j), status};
}

Outcome cmd_gap(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  const auto g = height_gap_probe(F, o.bound, o.iters, resolved_threads(o.threads));
  json j{{"observational", true},       {"hhat", certified_json(g.hhat)},
         {"lower", g.lower},            {"witness", g.witness.to_string()},
         {"searched", g.searched},      {"h_res", certified_json(g.hres_total)},
         {"s", g.s},                    {"reference", g.reference}};
  return {dump(j)};
}

Outcome cmd_energy(const Options& o, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  std::vector<ProjPoint> pts;
  for (const auto& s : o.points) pts.push_back(ProjPoint::parse(s));
  if (pts.size() < 2) throw InvalidInput("energy needs at least two --point values");
  const auto e = energy_sum(F, pts, parse_place_or_all(o.place), o.iters, resolved_threads(o.threads));
  const bool failed = e.identity && !e.identity->passed();
  return {dump(energy_json(e)), failed ? kExitUncertified : kExitOk};
}

Outcome cmd_compare(const Options&, const std::vector<HomogeneousLift>& maps) {
  const auto t = comparison_scatter(maps);
  json rows = json::array();
  for (const auto& r : t.rows) {
    json places = json::array();
    for (const auto& p : r.places) {
      places.push_back(json{{"place", p.v.to_string()},
                            {"neg_log_res", certified_json(p.neg_log_res)},
                            {"log_plus_moduli", certified_json(p.log_plus_moduli)}});
    }
    rows.push_back(json{{"map_id", r.map_id},
                        {"map", map_json(r.map)},
                        {"sigma1", r.milnor.sigma1.get_str()},
                        {"sigma2", r.milnor.sigma2.get_str()},
                        {"moduli_height", certified_json(r.milnor.moduli_height)},
                        {"h_res_finite", certified_json(r.hres_finite)},
                        {"h_res_total", certified_json(r.hres_total)},
                        {"places", places},
                        {"contradiction", r.contradiction}});
  }
  json j{{"observational", true},
         {"rows", rows},
         {"local", json{{"A", t.local_A}, {"B", t.local_B}}},
         {"global", json{{"C", t.global_C}, {"D", t.global_D}}}};
  return {dump(j)};
}

Outcome cmd_milnor(const Options&, const std::vector<HomogeneousLift>& maps) {
  const auto& F = single_map(maps);
  const auto m = milnor_invariants(F);
  json pt = json::array();
  for (const auto& c : m.moduli_point) pt.push_back(c.get_str());
  json j{{"sigma1", m.sigma1.get_str()}, {"sigma2", m.sigma2.get_str()}, {"sigma3", m.sigma3.get_str()},
         {"moduli_point", pt},            {"moduli_height", certified_json(m.moduli_height)}};
  return {dump(j)};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> without_flag(const std::vector<std::string>& args, const std::string& flag) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == flag) {
      ++i;
      continue;
    }
    if (args[i].rfind(flag + "=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

void write_manifest(const std::string& path, const std::string& command, const std::vector<std::string>& args,
                    const std::vector<HomogeneousLift>& maps, const Options& o, const std::string& output) {
  json hashes = json::array();
  for (const auto& F : maps) hashes.push_back(map_id(F));
  json j{{"tool", "dynheight"},
         {"version", DYNHEIGHT_VERSION},
         {"command", command},
         {"args", args},
         {"map_hash", maps.empty() ? json(nullptr) : json(map_id(maps.front()))},
         {"map_hashes", hashes},
         {"iters", o.iters},
         {"budget", o.budget},
         {"timestamp", utc_timestamp()},
         {"output_digest", hex64(fnv1a64(output))}};
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write manifest " + path);
  f << j.dump(2) << '\n';
}

int replay(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.replay_file);
  if (!in) throw InvalidInput("cannot read manifest " + o.replay_file);
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("manifest: ") + e.what());
  }
  if (!m.contains("args") || !m.contains("output_digest")) throw InvalidInput("manifest lacks args or output_digest");
  auto args = without_flag(m["args"].get<std::vector<std::string>>(), "--manifest");
  if (o.threads > 0) {
    args = without_flag(args, "--threads");
    args.push_back("--threads");
    args.push_back(std::to_string(o.threads));
  }
  if (!args.empty() && args.front() == "replay") throw InvalidInput("a manifest cannot replay another replay");
  std::ostringstream buf;
  const int status = run(args, buf, err);
  const std::string digest = hex64(fnv1a64(buf.str()));
  out << buf.str();
  if (digest != m["output_digest"].get<std::string>()) {
    err << "replay: output digest " << digest << " differs from recorded " << m["output_digest"].get<std::string>()
        << "\n";
    return kExitUncertified;
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights, resultants and Green functions of rational maps over Q", "dynheight"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DYNHEIGHT_VERSION);
  Options o;

  using Handler = std::function<Outcome(const Options&, const std::vector<HomogeneousLift>&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add_map = [&](CLI::App* sub, bool many = false) {
    auto* opt = sub->add_option("--map", o.maps, many ? "Map JSON files" : "Map JSON file")->required();
    if (!many) opt->expected(1);
  };
  auto add_iters = [&](CLI::App* sub) {
    sub->add_option("--iters", o.iters, "Iterations for local heights")->check(CLI::Range(1, 10000));
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->check(CLI::Range(0, 1024));
  };
  auto add_manifest = [&](CLI::App* sub) { sub->add_option("--manifest", o.manifest, "Write a run manifest"); };
  auto simple = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    add_manifest(sub);
    add_threads(sub);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  auto* s = simple("resultant", "Homogeneous resultant of the lift", cmd_resultant);
  add_map(s);

  s = simple("badplaces", "Bad primes, minimal-resultant certificates and h_res", cmd_badplaces);
  add_map(s);

  s = simple("minres", "Minimal resultant at one prime", cmd_minres);
  add_map(s);
  s->add_option("--prime", o.prime, "Prime p")->required();
  s->add_option("--oracle-radius", o.oracle_radius, "Also run the exhaustive search to this radius");

  s = simple("height", "Canonical height with per-place breakdown", cmd_height);
  add_map(s);
  s->add_option("--point", o.point, "Point [a:b]")->required();
  add_iters(s);

  s = simple("green", "Arakelov-Green pairing g_v(x, y)", cmd_green);
  add_map(s);
  s->add_option("--x", o.x, "First point [a:b]")->required();
  s->add_option("--y", o.y, "Second point [a:b]")->required();
  s->add_option("--place", o.place, "inf, a prime, or all");
  add_iters(s);

  s = simple("escape", "Escape radius, and a check for one point", cmd_escape);
  add_map(s);
  s->add_option("--place", o.place, "inf or a prime");
  s->add_option("--z", o.z, "Lift vector x0,x1 (rationals) to verify");
  s->add_option("--steps", o.steps, "Iterates to check")->check(CLI::Range(1, 1000));
  s->add_option("--delta", o.delta, "Required margin beyond R");

  s = simple("orbit", "Exact orbit with cycle detection", cmd_orbit);
  add_map(s);
  s->add_option("--point", o.point, "Point [a:b]")->required();
  s->add_option("--budget", o.budget, "Iteration budget")->check(CLI::Range(1L, 100000000L));
  s->add_option("--bound", o.orbit_bound, "Escape when the Weil height exceeds this");

  s = simple("preperiodic", "Rational preperiodic points in a height box", cmd_preperiodic);
  add_map(s);
  s->add_option("--bound", o.bound, "Weil height bound B")->required();
  s->add_option("--budget", o.budget, "Iteration budget per orbit")->check(CLI::Range(1L, 100000000L));

  s = simple("census", "Small-height census", cmd_census);
  add_map(s);
  s->add_option("--bound", o.bound, "Weil height bound B")->required();
  s->add_option("--t-fraction", o.t_fraction, "Threshold as a fraction of h_res / s");
  s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  s->add_option("--plot", o.plot, "Write an SVG scatter to this file");
  add_iters(s);

  s = simple("gap", "Smallest certified positive canonical height in a box", cmd_gap);
  add_map(s);
  s->add_option("--bound", o.bound, "Weil height bound B")->required();
  add_iters(s);

  s = simple("energy", "Pair sums of the Green pairing", cmd_energy);
  add_map(s);
  s->add_option("--point", o.points, "Point [a:b]; repeat for each point")->required();
  s->add_option("--place", o.place, "inf, a prime, or all");
  add_iters(s);

  s = simple("compare", "Resultant height against the quadratic moduli height", cmd_compare);
  s->add_option("--map", o.maps, "Map JSON files (quadratic)");

  s = simple("milnor", "Milnor invariants of a quadratic map", cmd_milnor);
  add_map(s);

  auto* rp = app.add_subcommand("replay", "Re-run a manifest and compare the output digest");
  rp->add_option("manifest", o.replay_file, "Manifest file")->required();
  add_threads(rp);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitInvalid;
  }

  try {
    if (rp->parsed()) return replay(o, out, err);
    for (auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      std::vector<HomogeneousLift> maps;
      for (const auto& path : o.maps) maps.push_back(load_map(path));
      const Outcome r = handler(o, maps);
      out << r.text;
      if (!o.manifest.empty()) write_manifest(o.manifest, sub->get_name(), args, maps, o, r.text);
      if (r.status == kExitUncertified) err << sub->get_name() << ": result is not fully certified\n";
      return r.status;
    }
  } catch (const Refused& e) {
    err << "refused: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace dynheight::cli

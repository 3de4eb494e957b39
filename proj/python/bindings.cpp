#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynheight/canonical.hpp"
#include "dynheight/census.hpp"
#include "dynheight/errors.hpp"
#include "dynheight/hash.hpp"
#include "dynheight/local_heights.hpp"
#include "dynheight/maps.hpp"
#include "dynheight/milnor.hpp"
#include "dynheight/reduction.hpp"

namespace py = pybind11;
using namespace dynheight;

namespace {

Integer to_integer(const py::int_& v) { return Integer(py::str(static_cast<py::handle>(v)).cast<std::string>()); }

py::int_ to_py(const Integer& n) { return py::int_(py::module_::import("builtins").attr("int")(n.get_str())); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

py::dict certified(const CertifiedValue& c) {
  py::dict d;
  d["value"] = c.value;
  d["err"] = c.err;
  d["exact"] = c.exact;
  return d;
}

std::vector<Integer> integers(const std::vector<py::int_>& xs) {
  std::vector<Integer> out;
  for (const auto& x : xs) out.push_back(to_integer(x));
  return out;
}

ProjPoint point(const py::object& x) {
  if (py::isinstance<py::str>(x)) return ProjPoint::parse(x.cast<std::string>());
  const auto t = x.cast<std::pair<py::int_, py::int_>>();
  return ProjPoint(to_integer(t.first), to_integer(t.second));
}

Place place(const py::object& v) {
  if (py::isinstance<py::int_>(v)) return Place::finite(to_integer(v));
  return Place::parse(v.cast<std::string>());
}

py::tuple point_tuple(const ProjPoint& x) { return py::make_tuple(to_py(x.x0()), to_py(x.x1())); }

py::dict orbit_dict(const OrbitRecord& r) {
  py::dict d;
  d["start"] = point_tuple(r.start);
  d["status"] = to_string(r.status);
  if (r.status == OrbitStatus::preperiodic) {
    d["tail"] = r.tail;
    d["cycle"] = r.cycle;
  }
  d["steps"] = r.steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heights, resultants and Green functions of rational maps over Q";

  py::register_exception<Refused>(m, "Refused", PyExc_ValueError);
  const auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<UnsupportedDegree>(m, "UnsupportedDegree", invalid.ptr());

  m.attr("DEFAULT_ITERATIONS") = kDefaultIterations;

  py::class_<HomogeneousLift>(m, "Map")
      .def(py::init([](const std::vector<py::int_>& p, const std::vector<py::int_>& q) {
             return HomogeneousLift::from_wire(integers(p), integers(q));
           }),
           py::arg("P"), py::arg("Q"),
           "Coefficients listed from x^d down to y^d.")
      .def_property_readonly("degree", &HomogeneousLift::degree)
      .def_property_readonly("resultant", [](const HomogeneousLift& F) { return to_py(F.resultant()); })
      .def_property_readonly("coefficients",
                             [](const HomogeneousLift& F) {
                               py::list out;
                               for (const auto& c : F.wire_coefficients()) out.append(to_py(c));
                               return out;
                             })
      .def("normalized", [](const HomogeneousLift& F) { return F.normalized(); })
      .def("map_id", [](const HomogeneousLift& F) { return map_id(F); })
      .def("__call__", [](const HomogeneousLift& F, const py::object& x) { return point_tuple(apply_map(F, point(x))); })
      .def("__repr__", [](const HomogeneousLift& F) { return "Map(" + F.to_string() + ")"; });

  m.def(
      "weil_height", [](const py::object& x) { return certified(weil_height(point(x))); }, py::arg("x"));

  m.def(
      "canonical_height",
      [](const HomogeneousLift& F, const py::object& x, int n_iter) {
        const auto h = canonical_height(F, point(x), n_iter);
        py::dict d = certified(h.total);
        py::dict places;
        for (const auto& [v, c] : h.per_place) places[py::str(v.to_string())] = certified(c);
        d["per_place"] = places;
        return d;
      },
      py::arg("F"), py::arg("x"), py::arg("n_iter") = kDefaultIterations);

  m.def(
      "green_pairing",
      [](const HomogeneousLift& F, const py::object& x, const py::object& y, const py::object& v, int n_iter) {
        return certified(green_pairing(F, point(x), point(y), place(v), n_iter));
      },
      py::arg("F"), py::arg("x"), py::arg("y"), py::arg("v") = "inf", py::arg("n_iter") = kDefaultIterations);

  m.def(
      "minimal_resultant",
      [](const HomogeneousLift& F, const py::int_& p) {
        const auto c = minimal_resultant_ord(F, to_integer(p));
        py::dict d;
        d["p"] = to_py(c.p);
        d["ord_start"] = c.ord_start;
        d["ord_min"] = c.ord_min;
        py::list rows;
        const auto e = c.conjugator.primitive_integer();
        rows.append(py::make_tuple(to_py(e[0]), to_py(e[1])));
        rows.append(py::make_tuple(to_py(e[2]), to_py(e[3])));
        d["conjugator"] = rows;
        d["method"] = to_string(c.method);
        return d;
      },
      py::arg("F"), py::arg("p"));

  m.def(
      "bad_places",
      [](const HomogeneousLift& F) {
        const auto r = bad_places(F);
        py::list out;
        for (const auto& [p, ord] : r.bad_primes) out.append(py::make_tuple(to_py(p), ord));
        return out;
      },
      py::arg("F"));

  m.def(
      "h_res",
      [](const HomogeneousLift& F) {
        const auto h = h_res(F);
        py::dict d = certified(h.total);
        d["finite"] = certified(h.finite_part);
        d["archimedean"] = certified(h.archimedean_part);
        d["archimedean_upper_bound_only"] = h.archimedean_upper_bound_only;
        return d;
      },
      py::arg("F"));

  m.def(
      "orbit",
      [](const HomogeneousLift& F, const py::object& x, long budget) { return orbit_dict(orbit(F, point(x), budget)); },
      py::arg("F"), py::arg("x"), py::arg("budget") = 10000);

  m.def(
      "preperiodic_points",
      [](const HomogeneousLift& F, double B, int threads) {
        const auto r = preperiodic_points(F, B, threads);
        py::list out;
        for (const auto& rec : r.points) out.append(point_tuple(rec.start));
        return out;
      },
      py::arg("F"), py::arg("B"), py::arg("threads") = 1);

  m.def(
      "census_csv",
      [](const HomogeneousLift& F, double t_fraction, double B, int n_iter, int threads) {
        return census_csv(small_height_census(F, t_fraction, B, n_iter, threads));
      },
      py::arg("F"), py::arg("t_fraction"), py::arg("B"), py::arg("n_iter") = kDefaultIterations,
      py::arg("threads") = 1);

  m.def(
      "milnor",
      [](const HomogeneousLift& F) {
        const auto mi = milnor_invariants(F);
        py::dict d;
        d["sigma1"] = to_py(mi.sigma1);
        d["sigma2"] = to_py(mi.sigma2);
        d["sigma3"] = to_py(mi.sigma3);
        d["moduli_height"] = certified(mi.moduli_height);
        return d;
      },
      py::arg("F"));
}

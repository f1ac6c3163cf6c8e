#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latticelab/error.hpp"
#include "latticelab/joinmeet.hpp"
#include "latticelab/report.hpp"

namespace py = pybind11;
using namespace latticelab;

namespace {

std::vector<std::string> names_of(const Lattice& l, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(l.name(x));
  return out;
}

py::dict component_dict(const PrimeComponent& c, const Lattice& l) {
  py::dict d;
  d["admissible"] = names_of(l, c.admissible.members);
  d["generators"] = c.ideal.groebner()->strings();
  d["prime"] = c.certified_prime;
  d["dim"] = c.dim;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Join-meet ideals of finite lattices";

  static py::exception<Error> error(m, "LatticeLabError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Lattice>(m, "Lattice")
      .def_static("build", &Lattice::build, py::arg("elements"), py::arg("covers"))
      .def_static("fixture", [](const std::string& name) { return fixtures::by_name(name); }, py::arg("name"))
      .def_static("from_json", [](const std::string& text) { return parse_lattice_json(text); })
      .def("to_json", [](const Lattice& l) { return lattice_to_json(l).dump(); })
      .def_property_readonly("elements", &Lattice::elements)
      .def("__len__", &Lattice::size)
      .def("join", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.name(l.join(l.at(a), l.at(b)));
      })
      .def("meet", [](const Lattice& l, const std::string& a, const std::string& b) {
        return l.name(l.meet(l.at(a), l.at(b)));
      })
      .def("leq", [](const Lattice& l, const std::string& a, const std::string& b) { return l.leq(l.at(a), l.at(b)); })
      .def("is_distributive", [](const Lattice& l) { return is_distributive(l).distributive; })
      .def("is_modular", [](const Lattice& l) { return is_modular(l).modular; })
      .def("admissible_sets", [](const Lattice& l) {
        std::vector<std::vector<std::string>> out;
        for (const auto& a : enumerate_admissible_sets(l)) out.push_back(names_of(l, a.members));
        return out;
      });

  m.def(
      "groebner_basis",
      [](const Lattice& l, const std::string& order) {
        auto jm = join_meet_ideal(l);
        return jm.ideal.groebner(parse_order(order, l.elements()))->strings();
      },
      py::arg("lattice"), py::arg("order") = "degrevlex");

  m.def(
      "minimal_primes",
      [](const Lattice& l, unsigned jobs) {
        py::gil_scoped_release release;
        auto dec = minimal_primes(l, {jobs});
        py::gil_scoped_acquire acquire;
        py::list out;
        for (const auto& c : dec.components) out.append(component_dict(c, l));
        return out;
      },
      py::arg("lattice"), py::arg("jobs") = 1);

  m.def(
      "radical_certificate",
      [](const Lattice& l, std::uint64_t seed) {
        RadicalOptions opts;
        opts.seed = seed;
        auto cert = radical_certificate(l, opts);
        py::dict d;
        d["verdict"] = std::string(to_string(cert.verdict));
        d["stage"] = cert.stage;
        d["witness"] = cert.witness ? py::cast(cert.witness->str()) : py::none();
        d["squarefree_order"] = cert.squarefree_order ? py::cast(*cert.squarefree_order) : py::none();
        return d;
      },
      py::arg("lattice"), py::arg("seed") = kDefaultSeed);

  m.def(
      "squarefree_order_scan",
      [](const Lattice& l, bool exhaustive, unsigned jobs) {
        ScanOptions opts;
        opts.mode = exhaustive ? ScanOptions::Mode::Exhaustive : ScanOptions::Mode::Auto;
        opts.jobs = jobs;
        ScanReport r;
        {
          py::gil_scoped_release release;
          r = squarefree_order_scan(l, opts);
        }
        py::dict d;
        d["any_squarefree"] = r.any_squarefree;
        d["orders_scanned"] = r.orders_scanned();
        d["witness_order"] = r.witness_order ? py::cast(*r.witness_order) : py::none();
        return d;
      },
      py::arg("lattice"), py::arg("exhaustive") = false, py::arg("jobs") = 1);

  m.def(
      "lk_suite",
      [](unsigned n, unsigned k) {
        auto report = lk_suite(n, k);
        return report_json(report, fixtures::lk(n, k), false).dump();
      },
      py::arg("n"), py::arg("k"));
}

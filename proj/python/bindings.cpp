#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sedfkit/dihedral.hpp"
#include "sedfkit/enumeration.hpp"
#include "sedfkit/io.hpp"

namespace py = pybind11;
using namespace sedfkit;

namespace {

std::pair<std::vector<Int>, std::vector<Int>> sides(const Sedf& s) {
  return {s.set_a().elements(), s.set_b().elements()};
}

Sedf make_sedf(Int n, const std::vector<Int>& a, const std::vector<Int>& b) { return Sedf(n, a, b); }

py::dict witness_dict(const EquivalenceWitness& w) {
  py::dict d;
  d["alpha"] = w.map.mult();
  d["beta"] = w.map.shift();
  d["swapped"] = w.swapped;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alpha-valuations and (a^2+1, 2, a, 1) strong external difference families";

  py::register_exception<Error>(m, "SedfkitError", PyExc_ValueError);

  py::class_<Valuation>(m, "Valuation")
      .def(py::init(&Valuation::from_sides), py::arg("small"), py::arg("large"))
      .def_readonly("a", &Valuation::a)
      .def_readonly("b", &Valuation::b)
      .def_readonly("small", &Valuation::small)
      .def_readonly("large", &Valuation::large)
      .def("__eq__", [](const Valuation& x, const Valuation& y) { return x == y; })
      .def("__repr__", [](const Valuation& v) { return "Valuation" + to_string(v); });

  m.def("verify_valuation", [](const Valuation& v) { return static_cast<bool>(verify_valuation(v)); });
  m.def("phi", &phi);
  m.def("compose", [](const std::string& seq) { return compose(parse_sequence(seq)); }, py::arg("sequence"));
  m.def("decompose", [](const Valuation& v) { return format_steps(decompose(v)); });
  m.def("blowup", [](const Valuation& v, const std::string& kind, Int ell) {
    return blowup(v, {kind == "I" ? BlowupKind::I : BlowupKind::II, ell});
  });
  m.def("project", [](const Valuation& v, const std::string& kind) {
    Projection p = project(v, kind == "I" ? BlowupKind::I : BlowupKind::II);
    return py::make_tuple(p.valuation, p.ell);
  });
  m.def("to_sedf", [](const Valuation& v) { return sides(to_sedf(v)); });

  m.def("verify_sedf", [](Int n, const std::vector<Int>& a, const std::vector<Int>& b) {
    return static_cast<bool>(verify_sedf(make_sedf(n, a, b)));
  });
  m.def("canonical_form", [](Int n, const std::vector<Int>& a, const std::vector<Int>& b) {
    CanonicalForm c = canonical_form(make_sedf(n, a, b));
    return py::make_tuple(sides(c.sedf), witness_dict(c.witness));
  });
  m.def("equivalent",
        [](Int n, const std::vector<Int>& a1, const std::vector<Int>& b1, const std::vector<Int>& a2,
           const std::vector<Int>& b2) -> py::object {
          auto w = equivalent(make_sedf(n, a1, b1), make_sedf(n, a2, b2));
          if (!w) return py::none();
          return witness_dict(*w);
        });

  m.def(
      "enumerate_sedfs",
      [](Int a, int workers, bool unit_filter) {
        EnumerationReport r;
        {
          py::gil_scoped_release release;
          r = enumerate_sedfs(a, {.workers = workers, .unit_filter = unit_filter});
        }
        return report_to_json(r, alpha_coverage(r), false).dump();
      },
      py::arg("a"), py::arg("workers") = 1, py::arg("unit_filter") = true,
      "Enumeration report as a JSON string.");

  m.def("dihedral_equivalence", [](Int k) {
    EquivalenceTranscript t = equivalence_witness(k);
    return py::make_tuple(t.n, to_string(t.h));
  });
  m.def("verify_dihedral_tile", [](Int n, Int k) {
    return static_cast<bool>(verify_near_factorization(cghk_construction(n, k)));
  });
}

// Python bindings for the flagein core.  Exact rationals cross the
// boundary as fractions.Fraction; the aggregate reports cross as plain
// dicts parsed from the canonical JSON rendering.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "flagein/verify.hpp"

namespace py = pybind11;
using namespace flagein;

namespace {

py::object to_fraction(const Rat& x) {
  return py::module_::import("fractions").attr("Fraction")(rat_str(x));
}

Rat from_fraction(const py::handle& obj) {
  const std::string num = py::str(obj.attr("numerator"));
  const std::string den = py::str(obj.attr("denominator"));
  return Rat(Int(num), Int(den));
}

py::object json_to_py(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

InvariantMetric metric_from(const py::handle& x1, const py::handle& x2) {
  return InvariantMetric(from_fraction(x1), from_fraction(x2));
}

}  // namespace

PYBIND11_MODULE(pyflagein, m) {
  m.doc() = "exact Einstein-metric invariants of two-summand flag manifolds";
  m.attr("__version__") = "0.1.0";

  py::register_exception<HeightNotTwoError>(m, "HeightNotTwoError");
  py::register_exception<InvalidTypeError>(m, "InvalidTypeError");
  py::register_exception<NotCriticalError>(m, "NotCriticalError");

  py::class_<RootSystem, std::shared_ptr<RootSystem>>(m, "RootSystem")
      .def(py::init([](const std::string& family, int rank) {
             if (family.size() != 1) throw InvalidTypeError(' ', rank, "family must be one letter");
             return std::make_shared<RootSystem>(LieType(family[0], rank));
           }),
           py::arg("family"), py::arg("rank"))
      .def_property_readonly("family",
                             [](const RootSystem& rs) { return std::string(1, rs.type().family); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("cartan", [](const RootSystem& rs) { return rs.cartan(); })
      .def_property_readonly("positive_roots",
                             [](const RootSystem& rs) { return rs.positive_roots(); })
      .def_property_readonly("highest_root",
                             [](const RootSystem& rs) { return rs.highest_root(); })
      .def_property_readonly("marks", [](const RootSystem& rs) { return rs.marks(); })
      .def_property_readonly("killing_scale",
                             [](const RootSystem& rs) { return to_fraction(rs.killing_scale()); })
      .def("inner_product",
           [](const RootSystem& rs, const RootVec& a, const RootVec& b) {
             return to_fraction(rs.inner_product(a, b));
           })
      .def("root_string", &RootSystem::root_string)
      .def("structure_constant_sq",
           [](const RootSystem& rs, const RootVec& a, const RootVec& b) {
             return to_fraction(rs.structure_constant_sq(a, b));
           })
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem(" + rs.type().name() + ")"; });

  m.def("t_closed_form",
        [](long long d1, long long d2) { return to_fraction(t_closed_form(d1, d2)); },
        py::arg("d1"), py::arg("d2"));
  m.def("scalar_curvature",
        [](long long d1, long long d2, const py::handle& t, const py::handle& x1,
           const py::handle& x2) {
          return to_fraction(scalar_curvature(d1, d2, from_fraction(t), metric_from(x1, x2)));
        },
        py::arg("d1"), py::arg("d2"), py::arg("t"), py::arg("x1"), py::arg("x2"));
  m.def("einstein_polynomial",
        [](long long d1, long long d2, const py::handle& t, const py::handle& x1,
           const py::handle& x2) {
          return to_fraction(
              einstein_polynomial(d1, d2, from_fraction(t), from_fraction(x1), from_fraction(x2)));
        },
        py::arg("d1"), py::arg("d2"), py::arg("t"), py::arg("x1"), py::arg("x2"));
  m.def("weyl_dim",
        [](const RootSystem& rs, const std::vector<RootVec>& rk_plus, const RootVec& lam) {
          return weyl_dim(rs, rk_plus, lam);
        },
        py::arg("root_system"), py::arg("rk_plus"), py::arg("lambda_"));

  m.def("analyze",
        [](const std::string& family, int rank, int node) {
          if (family.size() != 1) throw InvalidTypeError(' ', rank, "family must be one letter");
          return json_to_py(render_analysis_json(analyze(LieType(family[0], rank), node)));
        },
        py::arg("family"), py::arg("rank"), py::arg("node"),
        "full report for one painted diagram, as a dict");
  m.def("list_spaces",
        [](const std::string& family, int rank, bool dedup) {
          if (family.size() != 1) throw InvalidTypeError(' ', rank, "family must be one letter");
          const LieType t(family[0], rank);
          return json_to_py(render_list_json(t, dedup, list_rows(t, dedup)));
        },
        py::arg("family"), py::arg("rank"), py::arg("dedup") = false,
        "enumeration of the two-summand paintings, as a dict");
  m.def("verify",
        [](int max_rank) {
          const VerificationSummary s = run_verification(max_rank);
          py::dict d;
          d["spaces_covered"] = s.spaces_covered;
          d["all_passed"] = s.all_passed();
          py::list checks;
          for (const CheckResult& c : s.checks) {
            py::dict e;
            e["name"] = c.name;
            e["passes"] = c.passes;
            e["failures"] = c.failures;
            e["witnesses"] = c.witnesses;
            checks.append(e);
          }
          d["checks"] = checks;
          return d;
        },
        py::arg("max_rank"), "run the full cross-check battery");
}

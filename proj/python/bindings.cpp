#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dgbrauer/brauer.hpp"
#include "dgbrauer/classification.hpp"
#include "dgbrauer/cli.hpp"
#include "dgbrauer/io.hpp"

namespace py = pybind11;
using namespace dgb;

namespace {

// A validated dg-algebra together with the document it came from.
struct Algebra {
  PresentationDocument doc;
  DgAlgebra dg;
};

Algebra load_text(const std::string& text) {
  PresentationDocument doc = parse_presentation(text);
  DgAlgebra dg = to_dg_algebra(doc);
  return {std::move(doc), std::move(dg)};
}

py::dict verdict(const Verdict& v) {
  py::dict d;
  d["value"] = to_string(v.value);
  d["method"] = v.method;
  if (!v.witness.empty()) d["witness"] = v.witness;
  return d;
}

AlgebraOverBase relative(const Algebra& a, const Algebra* base) {
  if (!base) return over_field(a.dg);
  if (a.dg.algebra() == base->dg.algebra() && a.dg.images() == base->dg.images()) return over_itself(base->dg);
  return base_change(a.dg, base->dg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact graded and dg-algebra computations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one command line; returns (exit_code, stdout, stderr).");

  m.def(
      "canonical", [](const std::string& text) { return emit_canonical(parse_presentation(text)); }, py::arg("text"),
      "Canonical JSON form of a presentation document.");

  m.def(
      "template",
      [](const std::string& label, const std::string& field, std::optional<int> tdeg) {
        return emit_canonical(to_document(make_template({parse_case(label), Field::parse(field), tdeg})));
      },
      py::arg("case"), py::arg("field") = "Q", py::arg("tdeg") = py::none(),
      "Canonical JSON for a dg-field template.");

  py::class_<Algebra>(m, "Algebra")
      .def_static("from_json", &load_text, py::arg("text"))
      .def_property_readonly("field", [](const Algebra& a) { return a.dg.field().to_string(); })
      .def_property_readonly("dim", [](const Algebra& a) { return a.dg.algebra().dim(); })
      .def_property_readonly("unit_degree", [](const Algebra& a) { return a.doc.presentation.unit_degree; })
      .def_property_readonly("zero_differential", [](const Algebra& a) { return a.dg.is_zero_differential(); })
      .def("component_dim", [](const Algebra& a, int n) { return a.dg.algebra().component_dim(n); }, py::arg("degree"))
      .def("to_json", [](const Algebra& a) { return emit_canonical(to_document(a.dg)); })
      .def(
          "homology",
          [](const Algebra& a, int lo, int hi) {
            HomologyReport h = homology(a.dg, {lo, hi});
            py::dict out;
            for (const auto& d : h.degrees) out[py::int_(d.degree)] = d.homology;
            return out;
          },
          py::arg("lo") = -8, py::arg("hi") = 8, "Homology dimension per degree.")
      .def("classify",
           [](const Algebra& a) {
             ClassificationReport r = classify_dg_field(a.dg);
             py::dict d;
             d["case"] = to_string(r.label);
             d["summary"] = r.summary();
             d["y"] = r.y;
             d["y_squared"] = r.y_squared;
             return d;
           })
      .def("structure",
           [](const Algebra& a) {
             DgStructureReport r = dg_structure_report(a.dg);
             py::dict d;
             d["dg_division"] = verdict(r.dg_division);
             d["dg_simple"] = verdict(r.dg_simple);
             d["dichotomy"] = to_string(r.dichotomy);
             d["cycles_dim"] = r.cycles_dim;
             return d;
           })
      .def(
          "azumaya",
          [](const Algebra& a, const Algebra* base) {
            AzumayaReport r = azumaya_report(relative(a, base));
            py::dict d;
            d["mu_iso"] = r.mu_iso;
            d["mu_failure"] = r.mu_failure;
            d["graded_central"] = r.graded_central;
            d["graded_separable"] = verdict(r.graded_separable);
            d["kind_I"] = verdict(r.kind_I);
            d["kind_II"] = verdict(r.kind_II);
            d["cross_check"] = r.cross_check;
            return d;
          },
          py::arg("base") = nullptr, "Azumaya report over the base (default: the ground field).")
      .def(
          "end_witness",
          [](const Algebra& a, int max_rank, int shift_bound) {
            WitnessSearch s = end_witness_search(over_field(a.dg), max_rank, shift_bound);
            py::dict d;
            d["outcome"] = s.outcome;
            d["candidates"] = s.candidates;
            d["shifts"] = s.witness ? py::cast(s.witness->shifts) : py::none();
            return d;
          },
          py::arg("max_rank") = 3, py::arg("shift_bound") = 2);
}

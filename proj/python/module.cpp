#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syzcurve/corpus.hpp"
#include "syzcurve/parser.hpp"
#include "syzcurve/report.hpp"

namespace py = pybind11;
using namespace syzcurve;

namespace {

std::string analyze_json(const std::string& expr, const std::string& field, std::uint64_t seed,
                         std::optional<int> max_degree_table) {
  AnalyzeOptions o;
  o.field = parse_field_mode(field);
  o.seed = seed;
  o.max_table_degree = max_degree_table;
  CurveReport r;
  {
    py::gil_scoped_release release;
    r = analyze(expr, o);
  }
  return to_json(r).dump();
}

std::string corpus_json(const std::string& dir, const std::string& field, std::uint64_t seed) {
  AnalyzeOptions o;
  o.field = parse_field_mode(field);
  o.seed = seed;
  auto summary = run_corpus(dir, o);
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : summary.cases)
    cases.push_back({{"name", c.name}, {"passed", c.passed()}, {"failures", c.failures}});
  return nlohmann::ordered_json{{"cases", cases}, {"warnings", summary.warnings}, {"passed", summary.passed()}}.dump();
}

}  // namespace

PYBIND11_MODULE(_syzcurve, m) {
  m.doc() = "Jacobian syzygies, Tjurina numbers and freeness of plane curves";

  static py::exception<InternalInconsistency> internal(m, "InternalInconsistency", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InternalInconsistency& e) {
      py::set_error(internal, e.what());
    }
  });

  m.def("analyze_json", &analyze_json, py::arg("expr"), py::arg("field") = "auto", py::arg("seed") = 1,
        py::arg("max_degree_table") = py::none());
  m.def("corpus_json", &corpus_json, py::arg("dir"), py::arg("field") = "auto", py::arg("seed") = 1);
  m.def("normalize", [](const std::string& expr) { return to_string(parse_poly(expr)); }, py::arg("expr"),
        "Parse a homogeneous polynomial and print it in expanded form.");
  m.def(
      "intervals",
      [](int d) {
        std::vector<std::tuple<int, long long, long long>> out;
        for (const auto& r : interval_table(d)) out.emplace_back(r.r, r.tau_min, r.tau_max);
        return out;
      },
      py::arg("d"));
  m.def("terao", [](int d, long long tau) { return to_string(terao_rigidity(d, tau)); }, py::arg("d"),
        py::arg("tau"));
  m.def(
      "lattice_tjurina",
      [](const std::string& lines_text) { return lattice_tjurina(intersection_lattice(parse_line_set(lines_text))); },
      py::arg("lines_text"), "Combinatorial Tjurina number of a line arrangement given in the line-file format.");
  m.def("arrangement_poly",
        [](const std::string& lines_text) { return to_string(arrangement_poly(parse_line_set(lines_text))); },
        py::arg("lines_text"));
}

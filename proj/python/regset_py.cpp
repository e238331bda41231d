#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regset/classify.hpp"
#include "regset/codes.hpp"
#include "regset/constructions.hpp"
#include "regset/families.hpp"
#include "regset/pointset_io.hpp"
#include "regset/scans.hpp"
#include "regset/verify.hpp"

namespace py = pybind11;
using namespace regset;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string classify_json(const PointSet& X, bool all_frames, unsigned workers) {
  const IntersectionEnumerator E = enumerate(X, workers);
  nlohmann::json j;
  j["label"] = X.label();
  j["size"] = X.size();
  j["unital"] = is_unital(X, E);
  if (all_frames) {
    j["frames"] = nlohmann::json::array();
    for (const auto& r : auto_classify(X, E)) j["frames"].push_back(to_json(r));
  } else {
    const TypeReport r = classify(X, E, standard_frame(X.plane()));
    j["report"] = to_json(r);
    j["signature"] = pointed_signature(r);
  }
  return j.dump();
}

std::string spectrum_json(const PointSet& X, bool directions, unsigned workers) {
  const IntersectionEnumerator E = enumerate(X, workers);
  nlohmann::json j = to_json(E, directions);
  j["double_counting"] = check_double_counting(E).ok();
  return j.dump();
}

std::string code_json(const PointSet& X, bool exhaustive, unsigned workers) {
  const IntersectionEnumerator E = enumerate(X, workers);
  const CodeReport cr = code_report(X, E);
  nlohmann::json j = to_json(cr);
  if (exhaustive) j["exhaustive_agrees"] = weights_exhaustive(code_from_set(X), workers) == cr.weights;
  return j.dump();
}

std::string verify_json(const std::string& suite, std::optional<std::uint64_t> q, std::uint64_t seed,
                        unsigned workers, std::uint64_t sample) {
  VerifyOptions opt;
  opt.q = q;
  opt.seed = seed;
  opt.workers = workers;
  opt.sample = sample;
  return to_json(run_suite(suite, opt)).dump();
}

}  // namespace

PYBIND11_MODULE(_regset, m) {
  m.doc() = "Regular point sets of PG(2, Q), their line intersections and codes.";

  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);
  py::register_exception<ClassifyError>(m, "ClassifyError", PyExc_ValueError);
  py::register_exception<CodeError>(m, "CodeError", PyExc_ValueError);
  py::register_exception<VerifyError>(m, "VerifyError", PyExc_ValueError);
  py::register_exception<ScanError>(m, "ScanError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<PointSet>(m, "PointSet")
      .def_property_readonly("label", &PointSet::label)
      .def_property_readonly("order", [](const PointSet& X) { return X.plane().order(); })
      .def("__len__", &PointSet::size)
      .def("__contains__", &PointSet::contains)
      .def("members", &PointSet::members)
      .def("__eq__", [](const PointSet& a, const PointSet& b) { return a == b; })
      .def(
          "save", [](const PointSet& X, const std::string& path, bool as_json) { save_pointset(path, X, as_json); },
          py::arg("path"), py::arg("as_json") = false)
      .def("__repr__", [](const PointSet& X) {
        return "<PointSet Q=" + std::to_string(X.plane().order()) + " size=" + std::to_string(X.size()) + " '" +
               X.label() + "'>";
      });

  m.def("families", &family_names);
  m.def("suites", &suite_names);

  m.def(
      "build",
      [](const std::string& family, std::uint64_t q, std::uint32_t a, std::vector<std::uint32_t> B, unsigned s,
         unsigned h, std::vector<std::uint32_t> f, const std::string& base) {
        FamilySpec spec{family, q, a, std::move(B), s, h, std::move(f), base};
        return build_family(spec);
      },
      py::arg("family"), py::arg("q"), py::arg("a") = 1, py::arg("B") = std::vector<std::uint32_t>{},
      py::arg("s") = 2, py::arg("h") = 2, py::arg("f") = std::vector<std::uint32_t>{}, py::arg("base") = "oval1");
  m.def("load", &load_pointset, py::arg("path"));

  m.def("_classify", &classify_json, py::arg("X"), py::arg("all_frames") = false, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("_spectrum", &spectrum_json, py::arg("X"), py::arg("directions") = false, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("_code", &code_json, py::arg("X"), py::arg("exhaustive") = false, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("_verify", &verify_json, py::arg("suite"), py::arg("q") = std::nullopt, py::arg("seed") = 1,
        py::arg("workers") = 1, py::arg("sample") = 20, py::call_guard<py::gil_scoped_release>());
  m.def(
      "_hermitian_scan",
      [](std::uint64_t q, std::uint64_t sample, std::uint64_t seed, std::optional<std::uint32_t> a, unsigned workers) {
        return to_json(hermitian_scan(q, sample, seed, a, workers)).dump();
      },
      py::arg("q"), py::arg("sample") = 0, py::arg("seed") = 1, py::arg("a") = std::nullopt, py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "_scan_f", [](std::uint64_t q, bool entries, unsigned workers) { return to_json(scan_f(q, workers), entries).dump(); },
      py::arg("q"), py::arg("entries") = false, py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "_conjecture",
      [](unsigned p, unsigned h, std::uint64_t sample, std::uint64_t seed, unsigned workers) {
        return to_json(conjecture(p, h, sample, seed, workers)).dump();
      },
      py::arg("p") = 2, py::arg("h") = 2, py::arg("sample") = 0, py::arg("seed") = 1, py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());
}

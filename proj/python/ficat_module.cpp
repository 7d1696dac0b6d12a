#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ficat/api.hpp"
#include "ficat/checks.hpp"
#include "ficat/error.hpp"

namespace py = pybind11;
using nlohmann::json;
using ficat::api::CatSpec;

namespace {

// Values cross the boundary as JSON text.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

CatSpec spec(const std::string& cat, const std::string& ring, const std::vector<long long>& units) {
  return CatSpec{cat, ring, units};
}

}  // namespace

PYBIND11_MODULE(_ficat, m) {
  m.doc() = "Complemented categories over finite rings, their orders and shift complexes";

  // Translators run newest first, so the base class is registered first.
  auto base = py::register_exception<ficat::Error>(m, "FicatError");
  py::register_exception<ficat::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ficat::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ficat::InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("ring_info", [](const std::string& ring) { return to_py(ficat::api::ring_info(ring)); }, py::arg("ring"));

  m.def(
      "hom",
      [](const std::string& cat, int src, int dst, const std::string& ring, const std::vector<long long>& units,
         long long limit) { return to_py(ficat::api::hom_enum(spec(cat, ring, units), src, dst, false, limit)); },
      py::arg("cat"), py::arg("src"), py::arg("dst"), py::arg("ring") = "", py::arg("units") = std::vector<long long>{},
      py::arg("limit") = -1);

  m.def(
      "hom_count",
      [](const std::string& cat, int src, int dst, const std::string& ring, const std::vector<long long>& units) {
        return ficat::api::hom_enum(spec(cat, ring, units), src, dst, true)["count"].get<std::uint64_t>();
      },
      py::arg("cat"), py::arg("src"), py::arg("dst"), py::arg("ring") = "", py::arg("units") = std::vector<long long>{});

  m.def(
      "factor",
      [](const std::string& ring, const py::object& matrix, bool symplectic) {
        return to_py(ficat::api::factor(ring, from_py(matrix), symplectic));
      },
      py::arg("ring"), py::arg("matrix"), py::arg("symplectic") = false);

  m.def(
      "compose",
      [](const std::string& cat, const py::object& g, const py::object& f, const std::string& ring, int src, int dst) {
        return to_py(ficat::api::compose(spec(cat, ring, {}), from_py(g), from_py(f), src, dst));
      },
      py::arg("cat"), py::arg("g"), py::arg("f"), py::arg("ring") = "", py::arg("src") = -1, py::arg("dst") = -1);

  m.def(
      "order_cmp",
      [](const std::string& cat, const std::string& ring, const py::object& f, const py::object& g) {
        return to_py(ficat::api::order_cmp(spec(cat, ring, {}), from_py(f), from_py(g)));
      },
      py::arg("cat"), py::arg("ring"), py::arg("f"), py::arg("g"));

  m.def(
      "order_phi",
      [](const std::string& cat, const std::string& ring, const py::object& f, const py::object& g) {
        return to_py(ficat::api::order_phi(spec(cat, ring, {}), from_py(f), from_py(g)));
      },
      py::arg("cat"), py::arg("ring"), py::arg("f"), py::arg("g"));

  m.def(
      "check_axioms",
      [](const std::string& cat, int rank, const std::string& ring, const std::vector<long long>& units) {
        py::gil_scoped_release release;
        auto j = ficat::api::axioms(spec(cat, ring, units), rank);
        py::gil_scoped_acquire acquire;
        return to_py(j);
      },
      py::arg("cat"), py::arg("rank"), py::arg("ring") = "", py::arg("units") = std::vector<long long>{});

  m.def(
      "counts",
      [](const std::string& cat, int rank, const std::string& ring, const std::vector<long long>& units) {
        return to_py(ficat::api::counts(spec(cat, ring, units), rank));
      },
      py::arg("cat"), py::arg("rank"), py::arg("ring") = "", py::arg("units") = std::vector<long long>{});

  m.def(
      "module_dims",
      [](const std::string& cat, const std::string& module, int rank, const std::string& ring,
         const std::string& field) {
        return to_py(ficat::api::module_dims(spec(cat, ring, {}), module, rank, field)["dims"]);
      },
      py::arg("cat"), py::arg("module"), py::arg("rank"), py::arg("ring") = "", py::arg("field") = "Q");

  m.def(
      "homology",
      [](const std::string& cat, const std::string& module, const std::string& variant, int rank,
         const std::string& ring, const std::string& field, int truncation, int degree) {
        ficat::api::HomologyArgs a{module, variant, field, rank, truncation, degree, false};
        return to_py(ficat::api::homology(spec(cat, ring, {}), a)[0]);
      },
      py::arg("cat"), py::arg("module"), py::arg("variant"), py::arg("rank"), py::arg("ring") = "",
      py::arg("field") = "Q", py::arg("truncation") = -1, py::arg("degree") = -1);

  m.def(
      "run_checks",
      [](const std::string& profile, std::uint64_t seed, const std::vector<int>& ids) {
        json out = json::array();
        {
          py::gil_scoped_release release;
          for (const auto& r : ficat::run_checks({profile, seed}, ids)) out.push_back(r.to_json());
        }
        return to_py(out);
      },
      py::arg("profile") = "quick", py::arg("seed") = 0, py::arg("ids") = std::vector<int>{});
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cubictheta/cli.hpp"
#include "cubictheta/errors.hpp"
#include "cubictheta/identities.hpp"
#include "cubictheta/series_json.hpp"

namespace py = pybind11;
using namespace cubictheta;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string expand_json(const std::string& name, std::int64_t order) {
  return series_to_json(expand_series(name, Rational(order))).dump();
}

std::string verify_json(const std::string& id, std::int64_t order) { return report_to_json(verify(id, order)).dump(); }

std::string verify_all_json(std::int64_t order, std::optional<std::string> category, unsigned jobs) {
  std::optional<Category> cat;
  if (category) cat = parse_category(*category);
  nlohmann::json out = nlohmann::json::array();
  std::vector<VerifyReport> reports;
  {
    py::gil_scoped_release release;
    reports = verify_all(order, cat, jobs);
  }
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out.dump();
}

std::string registry_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : registry())
    out.push_back({{"id", r.id},
                   {"category", std::string(category_name(r.category))},
                   {"description", r.description},
                   {"anchor", r.anchor},
                   {"expected_grade", r.expected_grade}});
  return out.dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_cubictheta, m) {
  m.doc() = "Exact q-series engine for cubic theta functions";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<UnknownIdentity>(m, "UnknownIdentity", base.ptr());
  py::register_exception<UnknownName>(m, "UnknownName", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("expand_json", &expand_json, py::arg("name"), py::arg("order") = 40);
  m.def("verify_json", &verify_json, py::arg("id"), py::arg("order") = 40);
  m.def("verify_all_json", &verify_all_json, py::arg("order") = 40, py::arg("category") = py::none(),
        py::arg("jobs") = 1);
  m.def("registry_json", &registry_json);
  m.def("run_cli", &cli, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}

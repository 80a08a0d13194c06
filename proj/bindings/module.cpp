// Python bindings for the main operations; reports cross the boundary as
// JSON strings to keep the surface small.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crsym/acceptance.hpp"
#include "crsym/crmodel.hpp"
#include "crsym/prolong.hpp"

namespace py = pybind11;
using namespace crsym;

namespace {

QMat j_from_strings(const std::string& a, const std::string& b) {
  return ComplexStructure{Rat::parse(a), Rat::parse(b)}.matrix();
}

std::map<std::string, Rat> params_from_dict(const std::map<std::string, std::string>& d) {
  std::map<std::string, Rat> out;
  for (const auto& [k, v] : d) out[k] = Rat::parse(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_crsym, m) {
  m.doc() = "exact computations for rank-2 CR symbols and coordinate models";

  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError");
  py::register_exception<ParseError>(m, "ModelParseError");

  py::class_<GNLA>(m, "GNLA")
      .def_property_readonly("depth", &GNLA::depth)
      .def_property_readonly("dims", [](const GNLA& g) { return g.dims(); })
      .def("growth_reduced", [](const GNLA& g) { return g.growth().reduced; })
      .def("validate",
           [](const GNLA& g) {
             auto r = g.validate();
             return std::make_pair(r.ok, r.message);
           })
      .def("is_fundamental",
           [](const GNLA& g) {
             auto r = g.is_fundamental();
             return std::make_pair(r.ok, r.message);
           })
      .def("to_json", [](const GNLA& g) { return g.to_json().dump(); })
      .def_static("from_json",
                  [](const std::string& s) {
                    return GNLA::from_json(nlohmann::json::parse(s));
                  })
      .def("same_structure", &GNLA::same_structure)
      .def("renamed_standard", &GNLA::renamed_standard);

  m.def("catalog", &catalog, py::arg("name"), py::arg("param") = 0);
  m.def("free_gnla", &free_gnla, py::arg("depth"), py::arg("depth_limit") = 10);
  m.def("necklace_dim", &necklace_dim);
  m.def("deprolong", [](const GNLA& g) { return deprolong(g).renamed_standard(); });
  m.def("cauchy_dim",
        [](const GNLA& g, int level) { return cauchy_directions(g, level).size(); });

  m.def("der0_dim", [](const GNLA& g) { return der0(g).size(); });
  m.def("cr_g0_r", [](const GNLA& g, const std::string& a, const std::string& b) {
    return cr_g0(g, j_from_strings(a, b)).r;
  });
  m.def(
      "prolong_report",
      [](const GNLA& g, const std::string& a, const std::string& b, int maxdeg) {
        auto g0 = cr_g0(g, j_from_strings(a, b));
        return prolong(g, g0.basis, maxdeg).to_json().dump();
      },
      py::arg("m"), py::arg("a") = "1", py::arg("b") = "0", py::arg("max_degree") = 6);
  m.def("symmetry_bound", [](const GNLA& g, const std::string& a, const std::string& b) {
    return symmetry_bound(g, j_from_strings(a, b));
  });

  m.def("cocycle_dim", [](const GNLA& g) { return cocycles(g).size(); });
  m.def("enumerate_211", [](int max_depth) {
    auto e = enumerate_211(max_depth);
    std::vector<std::pair<int, std::vector<std::string>>> out;
    for (const auto& d : e.per_depth) out.emplace_back(d.depth, d.labels);
    return out;
  });
  m.def("classify_hc", [](const std::string& cocycle_json) {
    auto w = GradedCochain::from_json(m_hc(), 4, nlohmann::json::parse(cocycle_json));
    return to_string(classify_hc_extension(w).type);
  });

  m.def("normalize_j", [](const GNLA& g, const std::string& a, const std::string& b) {
    auto r = normalize_J(g, {Rat::parse(a), Rat::parse(b)});
    return std::make_pair(r.normal.a.to_string(), r.normal.b.to_string());
  });
  m.def("invariant_j_exists",
        [](const GNLA& g) { return invariant_J_exists(g).exists; });

  py::class_<CRModel>(m, "CRModel")
      .def_property_readonly("coords", [](const CRModel& c) { return c.coords; })
      .def_property_readonly("params", [](const CRModel& c) { return c.params; })
      .def("to_json", [](const CRModel& c) { return c.to_json().dump(); })
      .def("verify_tangency",
           [](const CRModel& c) {
             std::map<std::string, bool> out;
             for (const auto& f : c.fields) out[f.name] = verify_tangency(c, f).ok;
             return out;
           })
      .def("closure_report",
           [](const CRModel& c) { return closure(c).to_json().dump(); })
      .def("symbol",
           [](const CRModel& c, const std::map<std::string, std::string>& params) {
             return model_symbol(c, params_from_dict(params)).to_json().dump();
           },
           py::arg("params") = std::map<std::string, std::string>{});

  m.def("parse_model", &parse_model);
  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const auto& f : fixture_catalog()) names.push_back(f.name);
    return names;
  });
  m.def("fixture_source", [](const std::string& name) { return fixture(name).source; });

  m.def("run_acceptance", [] { return acceptance_to_json(run_acceptance()).dump(); });
}

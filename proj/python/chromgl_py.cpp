// JSON-string bindings; python/chromgl/__init__.py decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chromgl/bridge.hpp"

namespace py = pybind11;
using namespace chromgl;

namespace {

ClassFnUT class_function(const std::string& kind, const std::string& index, int q) {
  if (kind == "psi") return psi_pseudo(SchroderPath(index), q);
  const IndiffGraph g = parse_graph(index);
  if (kind == "chi_bar") return chi_bar(g, q);
  if (kind == "chi") return chi_super(g, q);
  if (kind == "delta") return delta(g, q);
  if (kind == "delta_bar") return delta_bar(g, q);
  throw InvalidArgument("unknown class function '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // translators run newest first, so the subclass goes last
  const auto& base = py::register_exception<Error>(m, "ChromglError", PyExc_ValueError);
  py::register_exception<SizeGuard>(m, "SizeGuard", base.ptr());

  m.def("csf", [](const std::string& graph) { return to_json(csf(parse_graph(graph))).dump(); });
  m.def("llt", [](const std::string& path) { return to_json(llt_vertical(SchroderPath(path))).dump(); });
  m.def("as_expand", [](const std::string& path) { return to_json(as_expansion(SchroderPath(path))).dump(); });
  m.def("d_coeffs", [](const std::string& graph) {
    const IndiffGraph g = parse_graph(graph);
    SymFunc f{g.n, Basis::PT, {}};
    for (const auto& [l, c] : d_coeffs(g)) f.coeffs.emplace(l, c);
    return to_json(f).dump();
  });
  m.def("induce", [](const std::string& kind, const std::string& index, int q) {
    return to_json(induce_to_GL(class_function(kind, index, q))).dump();
  });
  m.def("p_one_induced", [](const std::string& kind, const std::string& index, int q) {
    return to_json(p_one(induce_to_GL(class_function(kind, index, q)))).dump();
  });
  m.def("check_names", [] { return check_names(); });
  m.def(
      "verify",
      [](const std::vector<std::string>& names, std::optional<int> n, std::optional<int> q, bool deep) {
        VerifyOptions opts{deep, n, q};
        nlohmann::json arr = nlohmann::json::array();
        {
          py::gil_scoped_release release;
          for (const auto& r : verify(names, opts)) arr.push_back(r.to_json());
        }
        return arr.dump();
      },
      py::arg("names"), py::arg("n") = py::none(), py::arg("q") = py::none(), py::arg("deep") = false);
  m.def("set_allow_large_groups", &set_allow_large_groups);
}

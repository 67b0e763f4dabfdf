#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitcy/endoalg.hpp"
#include "orbitcy/geom.hpp"
#include "orbitcy/rigid.hpp"
#include "orbitcy/workbench.hpp"

namespace py = pybind11;
using namespace orbitcy;

PYBIND11_MODULE(_orbitcy, m) {
  m.doc() = "Finite 2-Calabi-Yau orbit categories (native core)";

  m.def("catalog", &preset_catalog);
  m.def("grammar", [](const std::string& s) { return parse_spec(s).grammar(); });

  py::class_<OrbitCategory>(m, "Category")
      .def(py::init([](const std::string& s) { return OrbitCategory(parse_spec(s)); }), py::arg("spec"))
      .def_property_readonly("name", [](const OrbitCategory& c) { return c.spec().name; })
      .def("__len__", &OrbitCategory::size)
      .def("label", &OrbitCategory::label)
      .def("shift", &OrbitCategory::shift, py::arg("x"), py::arg("s") = 1)
      .def("hom_dim", &OrbitCategory::hom_dim, py::arg("x"), py::arg("y"), py::arg("s") = 0)
      .def("ext1", &OrbitCategory::ext1)
      .def("ar_dot", &OrbitCategory::ar_dot)
      .def("ar_json", &OrbitCategory::to_json)
      .def("rigids", [](const OrbitCategory& c) { return indec_rigids(c).objects; })
      .def("maximal_rigids",
           [](const OrbitCategory& c) {
             std::vector<std::pair<std::vector<int>, bool>> out;
             for (const auto& r : maximal_rigids(c, indec_rigids(c))) out.emplace_back(r.objects, r.cluster_tilting);
             return out;
           })
      .def("is_cluster_tilting", [](const OrbitCategory& c, const std::vector<int>& t) { return is_cluster_tilting(c, t); })
      .def("endo_json",
           [](const OrbitCategory& c, const std::vector<int>& t) { return presentation_json(present(endo_algebra(c, t))); })
      .def("geom_json", [](const OrbitCategory& c) { return cross_validate(c).to_json(); });

  m.def("verify_tables_json", [](int n, int t, int k) {
    Sweep s;
    s.n_max = n;
    s.t_max = t;
    s.k_max = k;
    return tables_json(verify_tables(s));
  }, py::arg("n") = 4, py::arg("t") = 3, py::arg("k") = 10);
  m.def("compare_json", [](const std::string& l, const std::string& r) {
    const OrbitCategory c(parse_spec(l)), d(parse_spec(r));
    return comparison_json(c, d, compare(c, d));
  });
  m.def("gorenstein_demo", []() {
    const GorensteinDemo g = gorenstein_demo();
    return py::make_tuple(g.pass, g.lines);
  });
}

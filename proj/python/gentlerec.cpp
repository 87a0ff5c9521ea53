#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gentle/checks.hpp"
#include "gentle/format.hpp"
#include "gentle/gorenstein.hpp"
#include "gentle/report.hpp"

namespace py = pybind11;
using namespace gentle;

namespace {

py::object to_python(const json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

IndexedSite site_at(const Presentation& p, std::size_t cycle, const std::string& t) {
  if (cycle == 0) throw PresentationError("cycle index is 1-based");
  return site_for(p, cycle - 1, p.quiver().arrow_id(t));
}

}  // namespace

PYBIND11_MODULE(gentlerec, m) {
  m.doc() = "Gentle algebras, Gorenstein-projective modules and recollements";

  py::register_exception<PresentationError>(m, "PresentationError", PyExc_ValueError);

  py::class_<Presentation>(m, "Presentation")
      .def_static("parse", [](const std::string& text) { return parse_presentation(text); })
      .def_static("fixture", [](const std::string& name) { return load_fixture(name); })
      .def_static("random", &gen_random_gentle, py::arg("vertex_count"), py::arg("seed"))
      .def("render", [](const Presentation& p) { return render(p); })
      .def_property_readonly("vertex_count", &Presentation::vertex_count)
      .def_property_readonly("arrow_count", &Presentation::arrow_count)
      .def("is_gentle", [](const Presentation& p) { return validate_gentle(p).ok(); })
      .def("validate", [](const Presentation& p) { return to_python(validation_json(validate_gentle(p))); })
      .def("dimension", &algebra_dimension)
      .def("betti", &betti_number)
      .def("info", [](const Presentation& p) { return to_python(info_json(p)); })
      .def("cycles", [](const Presentation& p) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : full_relational_cycles(p)) {
          auto& labels = out.emplace_back();
          for (ArrowId a : c.arrows) labels.push_back(p.quiver().arrow(a).label);
        }
        return out;
      })
      .def("gproj", [](const Presentation& p) { return to_python(gproj_json(p)); })
      .def("band", [](const Presentation& p) -> std::optional<std::string> {
        auto b = find_band(p);
        if (!b) return std::nullopt;
        return band_string(p, *b);
      })
      .def("site", [](const Presentation& p, std::size_t cycle, const std::string& t) {
        return to_python(site_json(p, site_at(p, cycle, t)));
      }, py::arg("cycle"), py::arg("t"))
      .def("functors", [](const Presentation& p, std::size_t cycle, const std::string& t) {
        return to_python(functors_json(p, site_at(p, cycle, t), default_functor_inputs(p)));
      }, py::arg("cycle"), py::arg("t"))
      .def("check", [](const Presentation& p, const std::vector<std::string>& only) {
        return to_python(report_json(p, run_all(p, only)));
      }, py::arg("only") = std::vector<std::string>{})
      .def("__eq__", [](const Presentation& x, const Presentation& y) { return x == y; })
      .def("__repr__", [](const Presentation& p) {
        return "<Presentation " + std::to_string(p.vertex_count()) + " vertices, " +
               std::to_string(p.arrow_count()) + " arrows>";
      });

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& f : fixtures()) out.push_back(f.name);
    return out;
  });
}

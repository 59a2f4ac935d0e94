#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rmot/a1.hpp"
#include "rmot/a1cls.hpp"
#include "rmot/io.hpp"
#include "rmot/obstruction.hpp"
#include "rmot/smith.hpp"

namespace py = pybind11;
using namespace rmot;

PYBIND11_MODULE(_rmotivic, m) {
    m.def("adem_reduce", [](const std::string& s) { return element_str(parse_element(s)); });
    m.def("a1_count", [] { return enumerate_structures().size(); });
    m.def("theorem_tags", [] { return theorem_tags(); });
    m.def("verify_theorem", [](const std::string& tag) { return verify_theorem(tag).dump(); });
    m.def("module_json", [](std::array<int, 7> v) { return module_to_json(from_vector(StructureVector{v})).dump(); });
    m.def(
        "scan",
        [](const std::string& inst, const std::string& mode) -> py::object {
            auto in = obstruction_instance(inst);
            ScanResult r = window_scan(in.e1, in.D, parse_mode(mode));
            if (r.empty) return py::none();
            return py::make_tuple(r.witness->monomial(), r.witness->target.s, r.witness->target.w);
        },
        py::arg("instance"), py::arg("mode") = "existence");
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/expr_parser.hpp"
#include "amalgam/qf.hpp"
#include "amalgam/report.hpp"
#include "amalgam/sweep.hpp"

namespace py = pybind11;
using namespace amalgam;

namespace {

py::object to_python(const Record& j) {
    switch (j.type()) {
        case Record::value_t::null:
            return py::none();
        case Record::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Record::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case Record::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case Record::value_t::number_float:
            return py::float_(j.get<double>());
        case Record::value_t::string:
            return py::str(j.get<std::string>());
        case Record::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(to_python(v));
            return out;
        }
        case Record::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
            return out;
        }
        default:
            throw Error("unsupported record value");
    }
}

QfMethod method_from(const std::string& s) {
    if (s == "lattice") return QfMethod::FullLattice;
    if (s == "principal") return QfMethod::PrincipalIdeals;
    if (s == "auto") return QfMethod::Auto;
    throw py::value_error("method must be 'lattice', 'principal' or 'auto'");
}

struct PyRing {
    RingPtr ring;

    std::size_t order() const { return ring->order(); }
    std::string expr() const { return ring->origin()->to_string(); }
};

PyRing parse(const std::string& src) { return {parse_and_build(src).ring}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite commutative rings, amalgamated duplications and quasi-Frobenius checks";

    auto base = py::register_exception<Error>(m, "AmalgamError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<ScopeError>(m, "ScopeError", base.ptr());
    py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());

    py::class_<PyRing>(m, "Ring")
        .def_property_readonly("order", &PyRing::order)
        .def_property_readonly("expr", &PyRing::expr)
        .def_property_readonly("labels", [](const PyRing& r) { return r.ring->labels(); })
        .def("add", [](const PyRing& r, Element x, Element y) { return r.ring->add(x, y); })
        .def("mul", [](const PyRing& r, Element x, Element y) { return r.ring->mul(x, y); })
        .def_property_readonly("zero", [](const PyRing& r) { return r.ring->zero(); })
        .def_property_readonly("one", [](const PyRing& r) { return r.ring->one(); })
        .def("__len__", &PyRing::order)
        .def("__repr__", [](const PyRing& r) { return "<Ring " + r.expr() + ">"; });

    m.def("parse", &parse, py::arg("expr"), "Parse and build a ring expression");

    m.def(
        "is_qf",
        [](const PyRing& r, const std::string& method) {
            return is_quasi_frobenius(r.ring, {}, method_from(method)).qf;
        },
        py::arg("ring"), py::arg("method") = "lattice");

    m.def(
        "is_local", [](const PyRing& r) { return is_local(r.ring).local; }, py::arg("ring"));

    m.def(
        "idempotents", [](const PyRing& r) { return idempotents(*r.ring); }, py::arg("ring"));

    m.def(
        "ideals",
        [](const PyRing& r) {
            std::vector<std::vector<Element>> out;
            for (const auto& i : enumerate_ideals(r.ring)) out.push_back(i.members());
            return out;
        },
        py::arg("ring"), "All ideals in canonical order, as sorted member lists");

    m.def(
        "analyze",
        [](const PyRing& r) { return to_python(qf_report_record(*r.ring, analyze(r.ring))); },
        py::arg("ring"));

    m.def(
        "theorem",
        [](const PyRing& r, const std::vector<Element>& gens, const std::string& method) {
            auto i = ideal_from_generators(r.ring, gens);
            const auto v = check_main_theorem(i, {}, method_from(method));
            return to_python(theorem_record(*r.ring, r.ring->origin(), i, v));
        },
        py::arg("ring"), py::arg("generators"), py::arg("method") = "lattice");

    m.def(
        "duplicate",
        [](const PyRing& r, const std::vector<Element>& gens) {
            return PyRing{make_duplication(r.ring, gens).ring};
        },
        py::arg("ring"), py::arg("generators"));

    m.def(
        "decompose",
        [](const PyRing& r) {
            std::vector<PyRing> out;
            for (auto& f : local_decomposition(r.ring)) out.push_back({f.ring});
            return out;
        },
        py::arg("ring"), "Local factors along the idempotents");

    m.def(
        "sweep",
        [](std::size_t max_order, std::size_t base_order, int max_depth, unsigned workers,
           bool structured) {
            SweepConfig cfg;
            cfg.max_order = max_order;
            cfg.base_order = base_order;
            cfg.max_depth = max_depth;
            cfg.worker_count = workers;
            cfg.format = structured ? Format::Structured : Format::Text;
            std::ostringstream out;
            SweepSummary s;
            {
                py::gil_scoped_release release;
                s = run_sweep(cfg, out);
            }
            py::dict summary;
            summary["rings"] = s.rings;
            summary["pairs"] = s.pairs;
            summary["theorem_disagreements"] = s.theorem_disagreements;
            summary["failures"] = s.failures();
            return py::make_tuple(out.str(), summary);
        },
        py::arg("max_order") = 64, py::arg("base_order") = 0, py::arg("max_depth") = 2,
        py::arg("workers") = 1, py::arg("structured") = false);
}

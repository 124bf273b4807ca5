#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finitetc/complexity.hpp"
#include "finitetc/homotopy.hpp"
#include "finitetc/io.hpp"
#include "finitetc/simplicial.hpp"
#include "finitetc/subdivision.hpp"
#include "finitetc/zoo.hpp"

namespace py = pybind11;
using namespace finitetc;

namespace {

// PosetPtr points at an immutable poset; pybind11 holders must be non-const,
// so python sees a thin value wrapper instead.
struct PyPoset {
    PosetPtr p;
};

py::dict report_dict(const ComplexityReport& r) {
    py::dict d;
    d["invariant"] = r.invariant;
    d["n"] = r.n;
    if (r.m) d["m"] = *r.m;
    if (r.k) d["k"] = *r.k;
    switch (r.value_kind) {
        case ComplexityReport::ValueKind::Finite: d["value"] = r.value; break;
        case ComplexityReport::ValueKind::Infinite: d["value"] = "infinite"; break;
        case ComplexityReport::ValueKind::Unknown: d["value"] = "unknown"; break;
    }
    d["certified"] = r.value_kind == ComplexityReport::ValueKind::Unknown
                         ? "unknown"
                         : (r.exact ? "exact" : "upper_bound_at_budget");
    d["cover"] = r.cover_labels;
    d["notes"] = r.notes;
    return d;
}

ComputeConfig config_from(py::kwargs kwargs) {
    ComputeConfig cfg;
    if (kwargs.contains("budget_nodes")) {
        auto b = kwargs["budget_nodes"].cast<std::size_t>();
        cfg.budgets.homotopy_nodes = b;
        cfg.budgets.csp_nodes = b;
        cfg.budgets.enumeration_evals = b;
        cfg.budgets.cover_nodes = b;
    }
    if (kwargs.contains("emit_witness")) cfg.emit_witness = kwargs["emit_witness"].cast<bool>();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariants of finite topological spaces";

    py::register_exception<Error>(m, "FiniteTCError");

    py::class_<PyPoset>(m, "Poset")
        .def_static(
            "build",
            [](std::vector<std::string> labels, std::vector<std::pair<int, int>> edges) {
                return PyPoset{FinitePoset::build(std::move(labels), edges)};
            },
            py::arg("labels"), py::arg("edges"))
        .def("__len__", [](const PyPoset& p) { return p.p->size(); })
        .def("size", [](const PyPoset& p) { return p.p->size(); })
        .def("labels", [](const PyPoset& p) { return p.p->labels(); })
        .def("leq", [](const PyPoset& p, int x, int y) { return p.p->leq(x, y); })
        .def("hasse", [](const PyPoset& p) { return p.p->hasse(); })
        .def("is_connected", [](const PyPoset& p) { return p.p->is_connected(); })
        .def("__repr__", [](const PyPoset& p) {
            return "<Poset with " + std::to_string(p.p->size()) + " elements>";
        });

    m.def(
        "builtin", [](const std::string& name) { return PyPoset{builtin_space(name)}; },
        py::arg("name"), "resolve a zoo name such as sphere:1 or fence:3");
    m.def(
        "parse_poset", [](const std::string& text) { return PyPoset{parse_poset(text)}; },
        py::arg("text"));
    m.def(
        "core", [](const PyPoset& p) { return PyPoset{core(p.p)}; }, py::arg("poset"));
    m.def(
        "is_contractible", [](const PyPoset& p) { return is_contractible(*p.p); },
        py::arg("poset"));
    m.def(
        "homotopic",
        [](const PyPoset& dom, const PyPoset& cod, std::vector<int> f, std::vector<int> g) {
            Tri t = homotopic(MonotoneMap(dom.p, cod.p, std::move(f)),
                              MonotoneMap(dom.p, cod.p, std::move(g)));
            return t == Tri::True    ? py::object(py::bool_(true))
                   : t == Tri::False ? py::object(py::bool_(false))
                                     : py::object(py::none());
        },
        py::arg("domain"), py::arg("codomain"), py::arg("f"), py::arg("g"),
        "True/False, or None when the budget was exhausted");

    m.def(
        "cat",
        [](const PyPoset& p, py::kwargs kw) { return report_dict(cat(p.p, config_from(kw))); },
        py::arg("poset"));
    m.def(
        "cc",
        [](const PyPoset& p, int n, py::kwargs kw) {
            return report_dict(cc_n(p.p, n, config_from(kw)));
        },
        py::arg("poset"), py::arg("n") = 2);
    m.def(
        "cc_bounded",
        [](const PyPoset& p, int n, int mm, const std::string& variant, py::kwargs kw) {
            return report_dict(cc_nm(p.p, n, mm,
                                     variant == "linear" ? Variant::Linear : Variant::Wedge,
                                     config_from(kw)));
        },
        py::arg("poset"), py::arg("n"), py::arg("m"), py::arg("variant") = "wedge");
    m.def(
        "cc_k",
        [](const PyPoset& p, int n, int k, py::kwargs kw) {
            return report_dict(cc_k_n(p.p, n, k, config_from(kw)));
        },
        py::arg("poset"), py::arg("n"), py::arg("k"));
    m.def(
        "cc_inf",
        [](const PyPoset& p, int n, int k_max, py::kwargs kw) {
            return report_dict(cc_inf_n(p.p, n, k_max, config_from(kw)));
        },
        py::arg("poset"), py::arg("n") = 2, py::arg("k_max") = 2);
    m.def(
        "sc",
        [](const std::vector<std::vector<std::string>>& facets, int n, int k_max, py::kwargs kw) {
            // vertices ordered by first appearance, as in the text format
            std::vector<std::string> vertices;
            std::vector<std::vector<int>> idx_facets;
            for (const auto& f : facets) {
                std::vector<int> facet;
                for (const auto& v : f) {
                    auto it = std::find(vertices.begin(), vertices.end(), v);
                    if (it == vertices.end()) {
                        vertices.push_back(v);
                        facet.push_back(int(vertices.size()) - 1);
                    } else {
                        facet.push_back(int(it - vertices.begin()));
                    }
                }
                idx_facets.push_back(std::move(facet));
            }
            auto k = SimplicialComplex::build(std::move(vertices), std::move(idx_facets));
            return report_dict(sc_n_of_complex(k, n, k_max, config_from(kw)));
        },
        py::arg("facets"), py::arg("n") = 2, py::arg("k_max") = 2,
        "simplicial complexity of the complex given by its facets (vertex name lists)");
}

// SPDX-License-Identifier: MIT
//
// Python bindings for the core operations: graph construction and
// serialization, characteristic polynomials and spectra, reductions,
// inclusion-region membership, and the application-level helpers.
// Vertex indices are 0-based on the Python side.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isospec/apps.hpp"
#include "isospec/charpoly.hpp"
#include "isospec/io.hpp"
#include "isospec/reduce.hpp"
#include "isospec/regions.hpp"

namespace py = pybind11;
using namespace isospec;

namespace {

std::vector<cplx> poly_list(const Poly& p) {
    std::vector<cplx> out;
    for (int k = 0; k <= std::max(0, p.degree()); ++k) out.push_back(p.coeff(k));
    return out;
}

LaplacianKind laplacian_kind(const std::string& name) {
    if (name == "combinatorial") return LaplacianKind::combinatorial;
    if (name == "normalized") return LaplacianKind::normalized;
    if (name == "generalized") return LaplacianKind::generalized;
    throw std::invalid_argument("unknown laplacian kind \"" + name + "\"");
}

SuggestStrategy suggest_strategy(const std::string& name) {
    if (name == "loopless_first") return SuggestStrategy::loopless_first;
    if (name == "exposed_boundary") return SuggestStrategy::exposed_boundary;
    if (name == "exhaustive_small") return SuggestStrategy::exhaustive_small;
    throw std::invalid_argument("unknown strategy \"" + name + "\"");
}

py::dict reduction_dict(const ReductionResult& r) {
    py::dict d;
    d["graph"] = r.graph;
    d["kept"] = r.kept;
    d["exceptional"] = r.exceptional;
    py::list polys;
    for (const Poly& p : r.exceptional_polys) polys.append(poly_list(p));
    d["polynomials"] = polys;
    return d;
}

}  // namespace

PYBIND11_MODULE(isospec, m) {
    m.doc() = "isospectral graph reductions and eigenvalue inclusion regions";

    py::register_exception<NotStructuralError>(m, "NotStructuralError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<WeightedDigraph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def("size", &WeightedDigraph::size)
        .def("edge_count", &WeightedDigraph::edge_count)
        .def(
            "set_weight",
            [](WeightedDigraph& g, int i, int j, const std::vector<cplx>& num,
               const std::vector<cplx>& den) {
                g.set_weight(i, j, Rational(Poly(num), Poly(den)));
            },
            py::arg("i"), py::arg("j"), py::arg("num"),
            py::arg("den") = std::vector<cplx>{cplx(1.0)},
            "weight num/den as coefficient lists in ascending degree")
        .def(
            "weight",
            [](const WeightedDigraph& g, int i, int j) {
                const Rational& w = g.weight(i, j);
                return py::make_tuple(poly_list(w.num()), poly_list(w.den()));
            },
            py::arg("i"), py::arg("j"))
        .def("has_edge", &WeightedDigraph::has_edge, py::arg("i"), py::arg("j"))
        .def("__repr__", [](const WeightedDigraph& g) {
            return "<isospec.Graph n=" + std::to_string(g.size()) + " edges=" +
                   std::to_string(g.edge_count()) + ">";
        });

    m.def("loads", [](const std::string& text) { return graph_from_json(text).graph; },
          py::arg("text"), "parse a graph-file JSON string");
    m.def("load", [](const std::string& path) { return load_graph(path).graph; },
          py::arg("path"));
    m.def("dumps", &graph_to_json, py::arg("graph"), py::arg("index_base") = 1,
          "canonical graph-file JSON");

    m.def(
        "char_poly",
        [](const WeightedDigraph& g) {
            const Rational cp = char_poly(g);
            return py::make_tuple(poly_list(cp.num()), poly_list(cp.den()));
        },
        py::arg("graph"), "characteristic polynomial as (num, den) coefficient lists");
    m.def("spectrum", &spectrum, py::arg("graph"), py::arg("cluster_scale") = 1e-6,
          "eigenvalues as (value, multiplicity) pairs");
    m.def("spectral_radius", &spectral_radius, py::arg("graph"));

    m.def(
        "reduce",
        [](const WeightedDigraph& g, const std::vector<int>& keep) {
            return reduction_dict(reduce_over(g, keep));
        },
        py::arg("graph"), py::arg("keep"),
        "reduce over the kept vertices; returns graph, kept ids, exceptional values");
    m.def(
        "reduce_sequence",
        [](const WeightedDigraph& g, const std::vector<std::vector<int>>& keeps) {
            return reduction_dict(reduce_sequence(g, keeps));
        },
        py::arg("graph"), py::arg("keeps"));
    m.def(
        "verify_reduction_identity",
        [](const WeightedDigraph& g, const std::vector<int>& keep, double tol) {
            const Prop1Report rep = verify_reduction_identity(g, keep, tol);
            py::dict d;
            d["ok"] = rep.ok;
            d["residual"] = rep.residual;
            return d;
        },
        py::arg("graph"), py::arg("keep"), py::arg("tol") = 1e-8);

    m.def(
        "member",
        [](const WeightedDigraph& g, const std::string& kind, cplx z) {
            return member_union(poly_extension(g), parse_kind(kind), z);
        },
        py::arg("graph"), py::arg("kind"), py::arg("z"),
        "membership of z in the union of the given region family");
    m.def(
        "verify_improvement",
        [](const WeightedDigraph& g, const std::vector<int>& keep, const std::string& kind,
           int resolution) {
            const ImprovementReport rep =
                verify_improvement(g, keep, parse_kind(kind), resolution);
            py::dict d;
            d["ok"] = rep.ok;
            d["violating_cells"] = rep.violating_cells;
            return d;
        },
        py::arg("graph"), py::arg("keep"), py::arg("kind"), py::arg("resolution") = 200);

    m.def(
        "estimate_rho",
        [](const WeightedDigraph& g, int level) {
            const RhoReport rep = estimate_rho(g, level);
            py::dict d;
            d["level"] = rep.level;
            d["bound"] = rep.bound;
            d["kept"] = rep.kept;
            d["exceptional"] = rep.exceptional;
            return d;
        },
        py::arg("graph"), py::arg("level") = 1);
    m.def(
        "laplacian",
        [](const WeightedDigraph& g, const std::string& kind) {
            return laplacian(g, laplacian_kind(kind));
        },
        py::arg("graph"), py::arg("kind") = "combinatorial");
    m.def(
        "suggest",
        [](const WeightedDigraph& g, const std::string& strategy, int max_results) {
            py::list out;
            for (const Suggestion& s :
                 suggest_structural_sets(g, suggest_strategy(strategy), max_results)) {
                py::dict d;
                d["keep"] = s.keep;
                d["score"] = s.score;
                d["note"] = s.note;
                out.append(d);
            }
            return out;
        },
        py::arg("graph"), py::arg("strategy"), py::arg("max_results") = 10);
}

// Python bindings for the matching-polytope core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "matchpoly/ehrhart.hpp"
#include "matchpoly/errors.hpp"
#include "matchpoly/gorenstein.hpp"
#include "matchpoly/graph.hpp"
#include "matchpoly/idp.hpp"
#include "matchpoly/io.hpp"
#include "matchpoly/polytope.hpp"
#include "matchpoly/structures.hpp"

namespace py = pybind11;
using namespace matchpoly;

namespace {

EdgeWeighting to_weighting(const Graph& g, const std::vector<int>& weights, int level) {
    if (static_cast<int>(weights.size()) != g.edge_count())
        throw InputError("expected " + std::to_string(g.edge_count()) + " weights");
    return {weights, level};
}

py::object big_to_int(const BigInt& value) {
    // Route through the decimal string so arbitrary precision survives.
    return py::int_(py::str(value.str()));
}

py::list parts_list(const SplitResult& r) {
    py::list parts;
    for (const auto& p : r.parts) parts.append(p.weights);
    return parts;
}

py::dict split_dict(const SplitResult& r) {
    py::dict out;
    out["parts"] = parts_list(r);
    out["method"] = split_method_name(r.method);
    out["fallback_used"] = r.fallback_used;
    out["trace"] = r.trace;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matching polytopes: inequality description, Gorenstein "
              "classification, h*-vectors, integer decomposition property";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertex_count"),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("has_edge", &Graph::has_edge)
        .def("edge_index", &Graph::edge_index)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream ss;
            ss << "Graph(" << g.vertex_count() << " vertices, " << g.edge_count() << " edges)";
            return ss.str();
        });

    m.def("path", &make_path, py::arg("n"));
    m.def("cycle", &make_cycle, py::arg("n"));
    m.def("wheel", &make_wheel, py::arg("n"));
    m.def("complete", &make_complete, py::arg("n"));
    m.def("complete_multipartite", &make_complete_multipartite, py::arg("parts"));
    m.def("chortling_c5", &make_chortling_c5);
    m.def("chorded_c5", &make_chorded_c5);
    m.def("read_edge_list", &read_edge_list_file, py::arg("path"));

    m.def("essential_vertices", &essential_vertices);
    m.def("is_factor_critical", &is_factor_critical);
    m.def("is_bipartite", [](const Graph& g) {
        const auto r = is_bipartite(g);
        py::dict out;
        out["bipartite"] = r.bipartite;
        out["coloring"] = r.coloring;
        out["odd_cycle"] = r.odd_cycle;
        return out;
    });
    m.def("blocks", [](const Graph& g) {
        const auto bd = blocks(g);
        py::dict out;
        out["blocks"] = bd.blocks;
        out["block_edges"] = bd.block_edges;
        out["cut_vertices"] = bd.cut_vertices;
        return out;
    });
    m.def("line_graph", &line_graph);

    m.def(
        "odd_structures",
        [](const Graph& g, int vertex_cap) {
            EnumerationLimits limits;
            limits.vertex_cap = vertex_cap;
            py::list out;
            for (const auto& u : odd_structures(g, limits)) {
                py::dict entry;
                entry["vertices"] = u.vertices;
                entry["edges"] = u.edge_indices;
                out.append(entry);
            }
            return out;
        },
        py::arg("graph"), py::arg("vertex_cap") = 20);

    m.def("enumerate_matchings", [](const Graph& g) {
        py::list out;
        for (const auto& x : enumerate_matchings(g)) out.append(x.weights);
        return out;
    });
    m.def(
        "enumerate_t_matchings",
        [](const Graph& g, int t) {
            py::list out;
            for (const auto& x : enumerate_t_matchings(g, t)) out.append(x.weights);
            return out;
        },
        py::arg("graph"), py::arg("t"));
    m.def(
        "is_t_matching",
        [](const Graph& g, const std::vector<int>& weights, int t) {
            return is_t_matching(g, to_weighting(g, weights, t), t);
        },
        py::arg("graph"), py::arg("weights"), py::arg("t"));

    m.def(
        "count_points",
        [](const Graph& g, int t, double budget) {
            return big_to_int(count_points(g, t, Budget(budget)));
        },
        py::arg("graph"), py::arg("t"), py::arg("budget_seconds") = 600.0);
    m.def(
        "hstar",
        [](const Graph& g, double budget) {
            const auto h = hstar(g, Budget(budget));
            py::list coeffs;
            for (const auto& c : h.coefficients) coeffs.append(big_to_int(c));
            py::dict out;
            out["coefficients"] = coeffs;
            out["dimension"] = h.dimension;
            out["degree"] = h.degree();
            out["unimodal"] = is_unimodal(h);
            out["palindromic"] = is_palindromic(h);
            return out;
        },
        py::arg("graph"), py::arg("budget_seconds") = 600.0);

    m.def("check_conditions", [](const Graph& g) {
        const auto r = check_conditions(g);
        py::dict out;
        out["verdict"] = r.verdict;
        switch (r.cls) {
        case GorensteinClass::type_a: out["cls"] = "type_a"; break;
        case GorensteinClass::type_b: out["cls"] = "type_b"; break;
        case GorensteinClass::type_c: out["cls"] = "type_c"; break;
        case GorensteinClass::none: out["cls"] = "none"; break;
        }
        out["delta"] = r.delta ? py::object(py::int_(*r.delta)) : py::none();
        out["index"] = r.index_k ? py::object(py::int_(*r.index_k)) : py::none();
        return out;
    });
    m.def("verify_lattice_witness",
          [](const Graph& g, int k) { return verify_lattice_witness(g, k); });

    m.def(
        "idp_check",
        [](const Graph& g, int t_max, double budget) {
            const auto cert = idp_check(g, t_max, Budget(budget));
            py::dict out;
            out["certified"] = cert.certified;
            out["t_max"] = cert.t_max;
            out["instances_per_level"] = cert.instances;
            out["counterexample"] = cert.counterexample
                                        ? py::object(py::cast(cert.counterexample->weights))
                                        : py::none();
            return out;
        },
        py::arg("graph"), py::arg("t_max") = 4, py::arg("budget_seconds") = 600.0);
    m.def("blocks_sufficient", &blocks_sufficient);

    m.def(
        "split",
        [](const Graph& g, const std::vector<int>& weights, int t,
           double budget) -> py::object {
            const auto r = split_any(g, to_weighting(g, weights, t), t, Budget(budget));
            if (!r) return py::none();
            return split_dict(*r);
        },
        py::arg("graph"), py::arg("weights"), py::arg("t"), py::arg("budget_seconds") = 600.0);
    m.def(
        "wheel_split",
        [](const Graph& h, const std::vector<int>& weights, int t, double budget) {
            return split_dict(wheel_split(h, to_weighting(h, weights, t), t, Budget(budget)));
        },
        py::arg("wheel_subgraph"), py::arg("weights"), py::arg("t"),
        py::arg("budget_seconds") = 600.0);
}

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgcol/brooks.hpp"
#include "sgcol/colouring.hpp"
#include "sgcol/graph.hpp"
#include "sgcol/io.hpp"
#include "sgcol/structure.hpp"
#include "sgcol/verify.hpp"

namespace py = pybind11;

namespace {

sgcol::Sign to_sign(int value) {
    if (value == 1) return sgcol::Sign::Plus;
    if (value == -1) return sgcol::Sign::Minus;
    throw sgcol::InvalidArgumentError("edge sign must be +1 or -1");
}

sgcol::SignedGraph make_graph(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<sgcol::SignedEdge> list;
    list.reserve(edges.size());
    for (const auto& [u, v, s] : edges) {
        list.push_back({u, v, to_sign(s)});
    }
    return sgcol::SignedGraph(n, std::move(list));
}

std::vector<std::tuple<int, int, int>> edge_tuples(const sgcol::SignedGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const sgcol::SignedEdge& e : g.edges()) {
        out.emplace_back(e.u, e.v, sgcol::sign_value(e.sign));
    }
    return out;
}

py::dict report_dict(const sgcol::VerificationReport& report) {
    py::dict out;
    out["theorem"] = report.theorem_id;
    out["instances"] = report.instances_checked;
    out["passed"] = report.passed;
    if (report.counterexample) {
        out["counterexample"] = py::make_tuple(edge_tuples(report.counterexample->graph),
                                               report.counterexample->details);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_sgcol, m) {
    m.doc() = "Signed graph colouring toolkit";

    py::register_exception<sgcol::Error>(m, "SgcolError");

    py::class_<sgcol::SignedGraph>(m, "SignedGraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &sgcol::SignedGraph::vertex_count)
        .def_property_readonly("m", &sgcol::SignedGraph::edge_count)
        .def("edges", &edge_tuples)
        .def("degree", &sgcol::SignedGraph::degree, py::arg("v"))
        .def("max_degree", &sgcol::SignedGraph::max_degree)
        .def("is_simple", &sgcol::SignedGraph::is_simple)
        .def("is_connected", &sgcol::SignedGraph::is_connected)
        .def("underlying_simple", &sgcol::SignedGraph::underlying_simple)
        .def("__eq__",
             [](const sgcol::SignedGraph& a, const sgcol::SignedGraph& b) { return a == b; })
        .def("__repr__", [](const sgcol::SignedGraph& g) {
            return "SignedGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("switched", [](const sgcol::SignedGraph& g, const std::vector<int>& s) {
        return sgcol::switched(g, sgcol::SwitchSet(s));
    });
    m.def("negated", &sgcol::negated);
    m.def("is_balanced", [](const sgcol::SignedGraph& g) {
        sgcol::BalanceReport report = sgcol::is_balanced(g);
        py::dict out;
        out["balanced"] = report.balanced;
        out["switch"] = report.witness_switch.vertices();
        out["circuit"] = report.witness_circuit;
        return out;
    });
    m.def("is_antibalanced", &sgcol::is_antibalanced);
    m.def("switching_equivalent", &sgcol::switching_equivalent);

    m.def("colour_set", &sgcol::colour_set, py::arg("n"));
    m.def("check_proper", [](const sgcol::SignedGraph& g, const sgcol::Colouring& phi) {
        return sgcol::check_proper(g, phi);
    });
    m.def("switch_colouring", [](const sgcol::Colouring& phi, const std::vector<int>& s) {
        return sgcol::switch_colouring(phi, sgcol::SwitchSet(s));
    });
    m.def("greedy_colour", &sgcol::greedy_colour);
    m.def("degeneracy_ordering", [](const sgcol::SignedGraph& g) {
        sgcol::DegeneracyResult result = sgcol::degeneracy_ordering(g);
        return py::make_tuple(result.degeneracy, result.order);
    });
    m.def("find_n_colouring",
          [](const sgcol::SignedGraph& g, int n) { return sgcol::find_n_colouring(g, n); });
    m.def("chromatic_number", [](const sgcol::SignedGraph& g) {
        sgcol::ChromaticResult result = sgcol::chromatic_number(g);
        return py::make_tuple(result.chi, result.witness);
    });
    m.def("gamma_pair", [](const sgcol::SignedGraph& g) {
        sgcol::GammaPair gp = sgcol::gamma_pair(g);
        return py::make_tuple(gp.gamma, gp.gamma_star);
    });

    m.def("classify_exceptional", [](const sgcol::SignedGraph& g) {
        return std::string(sgcol::exceptional_name(sgcol::classify_exceptional(g)));
    });
    m.def("colour_complete", &sgcol::colour_complete);
    m.def("connected_ordering", &sgcol::connected_ordering);
    m.def("find_noncut_pair", [](const sgcol::SignedGraph& g) {
        sgcol::NoncutPair pair = sgcol::find_noncut_pair(g);
        return py::make_tuple(pair.a, pair.x, pair.b);
    });
    m.def("brooks_colour", [](const sgcol::SignedGraph& g) {
        sgcol::BrooksCertificate cert = sgcol::brooks_colour(g);
        py::dict out;
        out["colouring"] = cert.colouring;
        out["bound"] = cert.bound_used;
        out["exceptional"] = std::string(sgcol::exceptional_name(cert.exceptional));
        return out;
    });

    m.def("construct_sharpness_graph", &sgcol::construct_sharpness_graph, py::arg("n"));
    m.def("brute_acyclic_colouring",
          [](const sgcol::SignedGraph& g, int n) -> std::optional<std::vector<int>> {
              if (auto a = sgcol::brute_acyclic_colouring(g, n)) return a->values;
              return std::nullopt;
          });
    m.def("colour_from_acyclic", [](const sgcol::SignedGraph& g, const std::vector<int>& values) {
        return sgcol::colour_from_acyclic(g, sgcol::AcyclicColouring{values});
    });
    m.def("find_independent_forest_partition",
          [](const sgcol::SignedGraph& g)
              -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
              if (auto p = sgcol::find_independent_forest_partition(g)) {
                  return std::make_pair(p->independent, p->forest);
              }
              return std::nullopt;
          });
    m.def("colour_from_independent_forest_partition",
          [](const sgcol::SignedGraph& g, const std::vector<int>& independent,
             const std::vector<int>& forest) {
              return sgcol::colour_from_independent_forest_partition(
                  g, sgcol::IndependentForestPartition{independent, forest});
          });

    m.def("count_switching_classes", [](int max_vertices, bool connected_only, bool simple_only) {
        sgcol::EnumerationSpec spec;
        spec.max_vertices = max_vertices;
        spec.connected_only = connected_only;
        spec.simple_only = simple_only;
        return sgcol::enumerate_signed_graphs(spec, [](const sgcol::SignedGraph&) { return true; });
    });
    m.def(
        "verify_theorem",
        [](const std::string& theorem, int max_vertices, bool long_run,
           const std::vector<std::string>& planar_files, int jobs) {
            sgcol::EnumerationSpec spec;
            spec.max_vertices = max_vertices;
            spec.long_run = long_run;
            sgcol::VerifyOptions options;
            options.jobs = jobs;
            options.planar_files = planar_files;
            return report_dict(sgcol::verify_theorem(theorem, spec, options));
        },
        py::arg("theorem"), py::arg("max_vertices") = 4, py::arg("long_run") = false,
        py::arg("planar_files") = std::vector<std::string>{}, py::arg("jobs") = 1);

    m.def("parse_graph", &sgcol::parse_graph_file);
    m.def("render_graph", &sgcol::render_graph);
    m.def("render_colouring", &sgcol::render_colouring);
}

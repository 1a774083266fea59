#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/greedy.hpp"
#include "rainbow/oracle.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId, ColorId>;

std::vector<Edge> to_edges(const std::vector<EdgeTuple>& tuples) {
    std::vector<Edge> out;
    out.reserve(tuples.size());
    for (const auto& [u, v, c] : tuples) out.push_back(Edge{u, v, c});
    return out;
}

std::vector<EdgeTuple> to_tuples(const std::vector<Edge>& edges) {
    std::vector<EdgeTuple> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v, e.color);
    return out;
}

py::object rational(const std::optional<Rational>& r) {
    if (!r) return py::none();
    return py::make_tuple(r->num, r->den);
}

py::dict report_dict(const PipelineReport& r) {
    py::dict d;
    d["matching"] = to_tuples(r.matching);
    d["delta"] = r.delta;
    d["n"] = r.n;
    d["threshold"] = rational(r.threshold_value);
    d["guarantee_applies"] = r.guarantee_applies;
    d["guarantee_met"] = r.guarantee_met;
    d["triangle_free_rule"] = r.used_triangle_free;
    d["vertex_removals"] = r.vertex_removals;
    d["class_removals"] = r.class_removals;
    d["core_target"] = r.chain.core_target;
    d["greedy_steps"] = r.trace.steps.size();
    py::list violations;
    for (const TraceViolation& v : check_trace(r.trace, r.chain.core.edge_count())) {
        violations.append(py::make_tuple(v.code, v.step, v.detail));
    }
    d["trace_violations"] = violations;
    return d;
}

LatinSquare square_from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
    LatinSquare s;
    s.n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != s.n) {
            throw Error(ErrorCode::InvalidLatin, "square rows must all have length n");
        }
        s.cells.insert(s.cells.end(), row.begin(), row.end());
    }
    validate_latin(s);
    return s;
}

std::vector<std::vector<std::uint32_t>> rows_of(const LatinSquare& s) {
    std::vector<std::vector<std::uint32_t>> rows(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
        rows[i].assign(s.cells.begin() + i * s.n, s.cells.begin() + (i + 1) * s.n);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_rainbow, m) {
    m.doc() = "Rainbow matchings in properly edge-colored graphs";

    auto err = py::register_exception<Error>(m, "RainbowError", PyExc_ValueError);
    (void)err;

    py::class_<ColoredGraph>(m, "ColoredGraph")
        .def(py::init([](const std::vector<EdgeTuple>& edges) {
                 return ColoredGraph::build(to_edges(edges));
             }),
             py::arg("edges"))
        .def_property_readonly("vertex_count", &ColoredGraph::vertex_count)
        .def_property_readonly("edge_count", &ColoredGraph::edge_count)
        .def_property_readonly("min_degree", &ColoredGraph::min_degree)
        .def_property_readonly("max_degree", &ColoredGraph::max_degree)
        .def("degree", &ColoredGraph::degree)
        .def("vertices", &ColoredGraph::vertices)
        .def("edges", [](const ColoredGraph& g) { return to_tuples(g.edges()); })
        .def("colors", &ColoredGraph::colors)
        .def("is_triangle_free", &ColoredGraph::is_triangle_free)
        .def("verify_matching", [](const ColoredGraph& g, const std::vector<EdgeTuple>& m) {
            return g.verify_matching(to_edges(m));
        });

    m.def("threshold",
          [](std::size_t delta, bool triangle_free) {
              const Rational r = threshold(delta, triangle_free);
              return py::make_tuple(r.num, r.den);
          },
          py::arg("delta"), py::arg("triangle_free") = false,
          "Order bound as a (numerator, denominator) pair in lowest terms.");

    m.def("find_rainbow_matching",
          [](const ColoredGraph& g, bool triangle_free) {
              return report_dict(find_rainbow_matching(g, triangle_free));
          },
          py::arg("graph"), py::arg("triangle_free") = false);

    m.def("max_rainbow_matching",
          [](const ColoredGraph& g, std::size_t edge_cap) {
              const OracleResult r = max_rainbow_matching(g, edge_cap);
              return py::make_tuple(r.max_size, to_tuples(r.witness));
          },
          py::arg("graph"), py::arg("edge_cap") = kDefaultEdgeCap);

    m.def("has_transversal",
          [](const std::vector<std::vector<std::uint32_t>>& rows, std::size_t edge_cap) {
              return has_transversal(square_from_rows(rows), edge_cap);
          },
          py::arg("square"), py::arg("edge_cap") = kDefaultEdgeCap);

    m.def("cyclic_latin", [](std::size_t n) { return rows_of(cyclic_latin(n)); });
    m.def("latin_graph", [](const std::vector<std::vector<std::uint32_t>>& rows) {
        return latin_to_bipartite(square_from_rows(rows));
    });
    m.def("complete_bipartite", &complete_bipartite_colored, py::arg("a"), py::arg("b"));
    m.def("random_properly_colored", &random_properly_colored, py::arg("n"), py::arg("delta"),
          py::arg("seed"));
    m.def("random_bipartite_colored", &random_bipartite_colored, py::arg("na"), py::arg("nb"),
          py::arg("delta"), py::arg("seed"));
}

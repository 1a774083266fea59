#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rainbow/bench.hpp"
#include "rainbow/edge_list.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow::cli {

namespace {

using json = nlohmann::ordered_json;

json edge_json(const Edge& e) { return json::array({e.u, e.v, e.color}); }

Matching sorted_by_color(Matching m) {
    std::sort(m.begin(), m.end(), [](const Edge& a, const Edge& b) {
        return a.color != b.color ? a.color < b.color : edge_order_less(a, b);
    });
    return m;
}

int input_error(std::ostream& err, const std::exception& e) {
    if (auto* re = dynamic_cast<const Error*>(&e)) {
        err << "error: " << to_string(re->code()) << ": " << re->what() << '\n';
    } else {
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

ColoredGraph load_graph(const std::filesystem::path& path) {
    return ColoredGraph::build(read_edge_list(path));
}

}  // namespace

json run_report(const ColoredGraph& g, const PipelineReport& report,
                const std::vector<TraceViolation>& violations, std::int64_t elapsed_ns) {
    json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["delta"] = report.delta;
    doc["Delta"] = g.max_degree();
    doc["triangle_free"] = g.is_triangle_free();
    if (report.threshold_value) {
        doc["threshold"] = report.threshold_value->to_double();
        doc["threshold_exact"] = std::to_string(report.threshold_value->num) + "/" +
                                 std::to_string(report.threshold_value->den);
    } else {
        doc["threshold"] = nullptr;
        doc["threshold_exact"] = nullptr;
    }
    doc["guarantee_applies"] = report.guarantee_applies;
    doc["guarantee_met"] = report.guarantee_met;
    doc["triangle_free_rule"] = report.used_triangle_free;
    json matching = json::array();
    for (const Edge& e : sorted_by_color(report.matching)) {
        matching.push_back(edge_json(e));
    }
    doc["matching"] = std::move(matching);
    json steps = json::array();
    for (const ReductionStep& s : report.chain.steps) {
        steps.push_back({
            {"kind", to_string(s.kind)},
            {"removed", s.kind == StepKind::VertexRemoval ? s.removed_vertex : s.removed_color},
            {"trimmed", s.trimmed.size()},
            {"primary_removed", s.primary_removed.size()},
            {"target_before", s.target_before},
            {"min_degree_after", s.min_degree_after},
        });
    }
    doc["reduction_steps"] = std::move(steps);
    json found = json::array();
    for (const TraceViolation& v : violations) {
        found.push_back({{"code", v.code}, {"step", v.step}, {"detail", v.detail}});
    }
    doc["trace_summary"] = {
        {"k", report.trace.k},
        {"h", report.trace.h},
        {"target", report.trace.target},
        {"violations", std::move(found)},
    };
    doc["elapsed_ns"] = elapsed_ns;
    return doc;
}

int cmd_find(const std::filesystem::path& input, const FindOptions& opts, std::ostream& out,
             std::ostream& err) {
    ColoredGraph g;
    try {
        g = load_graph(input);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }

    const auto start = std::chrono::steady_clock::now();
    PipelineReport report;
    try {
        report = find_rainbow_matching(g, opts.triangle_free);
    } catch (const Error& e) {
        err << "internal error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kGuaranteeViolation;
    }
    const auto stop = std::chrono::steady_clock::now();
    std::vector<TraceViolation> violations;
    if (opts.trace_check) {
        violations = check_trace(report.trace, report.chain.core.edge_count());
    }

    if (opts.json) {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        out << run_report(g, report, violations, elapsed).dump(2) << '\n';
    } else {
        write_edge_list(out, sorted_by_color(report.matching));
    }

    int code = kOk;
    if (const MatchingVerdict verdict = g.check_matching(report.matching); !verdict.ok()) {
        err << "internal error: produced matching is invalid: " << verdict.message << '\n';
        code = kGuaranteeViolation;
    }
    if (report.guarantee_applies && report.matching.size() != report.delta) {
        err << "guarantee violated: n=" << report.n << " exceeds the threshold but the matching has "
            << report.matching.size() << " of " << report.delta << " edges\n";
        code = kGuaranteeViolation;
    }
    for (const TraceViolation& v : violations) {
        err << "trace violation " << v.code << " at step " << v.step << ": " << v.detail << '\n';
        code = kGuaranteeViolation;
    }
    return code;
}

int cmd_verify(const std::filesystem::path& graph_path, const std::filesystem::path& matching_path,
               std::ostream& out, std::ostream& err) {
    try {
        const ColoredGraph g = load_graph(graph_path);
        const std::vector<Edge> matching = read_edge_list(matching_path);
        const MatchingVerdict verdict = g.check_matching(matching);
        if (!verdict.ok()) {
            err << "invalid: " << verdict.message << '\n';
            return kInputError;
        }
        out << "valid rainbow matching of size " << matching.size() << '\n';
        return kOk;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

int cmd_oracle(const std::filesystem::path& input, std::optional<std::size_t> k, std::size_t cap,
               std::ostream& out, std::ostream& err) {
    try {
        const ColoredGraph g = load_graph(input);
        if (k) {
            out << (has_rainbow_matching_of_size(g, *k, cap) ? "yes" : "no") << '\n';
            return kOk;
        }
        const OracleResult result = max_rainbow_matching(g, cap);
        out << "max " << result.max_size << '\n';
        write_edge_list(out, sorted_by_color(result.witness));
        return kOk;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

namespace {

void expect_params(const GenOptions& opts, std::size_t count, const char* usage) {
    if (opts.params.size() != count) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("gen ") + opts.kind + " expects " + usage);
    }
}

void emit_generated(const GenOptions& opts, std::ostream& out) {
    std::optional<LatinSquare> square;
    ColoredGraph graph;
    const auto& p = opts.params;
    if (opts.kind == "latin-cyclic" || opts.kind == "latin-shuffled") {
        expect_params(opts, 1, "<n>");
        square = cyclic_latin(p[0]);
        if (opts.kind == "latin-shuffled") {
            square = shuffled_latin(*square, opts.seed);
        }
        graph = latin_to_bipartite(*square);
    } else if (opts.kind == "random") {
        expect_params(opts, 2, "<n> <delta>");
        graph = random_properly_colored(p[0], p[1], opts.seed);
    } else if (opts.kind == "bipartite") {
        expect_params(opts, 3, "<na> <nb> <delta>");
        graph = random_bipartite_colored(p[0], p[1], p[2], opts.seed);
    } else if (opts.kind == "kab") {
        expect_params(opts, 2, "<a> <b>");
        graph = complete_bipartite_colored(p[0], p[1]);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown generator kind '" + opts.kind + "'");
    }
    if (opts.square) {
        if (!square) {
            throw Error(ErrorCode::InvalidArgument, "--square applies only to latin kinds");
        }
        write_latin(out, *square);
    } else {
        write_edge_list(out, graph.edges());
    }
}

}  // namespace

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.out) {
            std::ofstream file(*opts.out, std::ios::binary);
            if (!file) {
                throw Error(ErrorCode::InvalidArgument, "cannot write " + opts.out->string());
            }
            emit_generated(opts, file);
        } else {
            emit_generated(opts, out);
        }
        return kOk;
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    BenchResult result;
    try {
        result = scaling_run(opts.deltas, opts.sizes, opts.reps, opts.seed);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    if (opts.csv_out) {
        std::ofstream file(*opts.csv_out);
        if (!file) {
            err << "error: cannot write " << opts.csv_out->string() << '\n';
            return kInputError;
        }
        write_bench_csv(file, result.rows);
    } else {
        write_bench_csv(out, result.rows);
    }
    out << format_ratios(result.ratios);
    for (const BenchRow& row : result.rows) {
        if (row.matching_size != row.delta) {
            err << "guarantee violated: delta=" << row.delta << " n=" << row.n
                << " matching size " << row.matching_size << '\n';
            return kGuaranteeViolation;
        }
    }
    return kOk;
}

int cmd_trace(const std::filesystem::path& input, bool triangle_free, std::ostream& out,
              std::ostream& err) {
    ColoredGraph g;
    try {
        g = load_graph(input);
    } catch (const std::exception& e) {
        return input_error(err, e);
    }
    const PipelineReport report = find_rainbow_matching(g, triangle_free);
    const auto violations = check_trace(report.trace, report.chain.core.edge_count());
    json doc;
    doc["target"] = report.trace.target;
    doc["core_edges"] = report.chain.core.edge_count();
    doc["k"] = report.trace.k;
    doc["h"] = report.trace.h;
    json steps = json::array();
    for (std::size_t i = 0; i < report.trace.steps.size(); ++i) {
        const GreedyStepRecord& s = report.trace.steps[i];
        steps.push_back({
            {"i", s.index},
            {"color", s.chosen_color},
            {"c", s.class_size},
            {"edge", edge_json(s.edge)},
            {"degree_sum", s.degree_sum},
            {"mu", s.mu},
            {"removed", s.removed_total},
            {"g", s.same_color_removed},
            {"f", report.trace.f[i]},
        });
    }
    doc["steps"] = std::move(steps);
    json found = json::array();
    for (const TraceViolation& v : violations) {
        found.push_back({{"code", v.code}, {"step", v.step}, {"detail", v.detail}});
    }
    doc["violations"] = std::move(found);
    out << doc.dump(2) << '\n';
    return violations.empty() ? kOk : kGuaranteeViolation;
}

}  // namespace rainbow::cli

#include "rainbow/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rainbow {

Rational threshold(std::size_t delta, bool triangle_free) {
    if (delta == 0) {
        throw Error(ErrorCode::ZeroDelta, "threshold is undefined for minimum degree 0");
    }
    const auto d = static_cast<std::int64_t>(delta);
    // Both bounds written over the common denominator 8d.
    const std::int64_t num = triangle_free ? 49 * d * d - 84 * d + 36 : 52 * d * d - 92 * d + 41;
    const std::int64_t den = 8 * d;
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::pair<Matching, GreedyTrace> greedy_matching(ColoredGraph g, std::size_t target) {
    GreedyTrace trace;
    trace.target = target;
    trace.initial_edge_count = g.edge_count();
    const std::vector<VertexId> start_vertices = g.vertices();

    Matching matching;
    while (!g.empty()) {
        GreedyStepRecord rec;
        rec.index = trace.steps.size() + 1;
        std::tie(rec.chosen_color, rec.class_size) = g.smallest_color_class();

        // color_class() is in edge order, so the strict comparison keeps the
        // first edge among equal degree sums.
        std::optional<Edge> best;
        std::size_t best_sum = 0;
        for (const Edge& e : g.color_class(rec.chosen_color)) {
            const std::size_t sum = g.degree(e.u) + g.degree(e.v);
            if (!best || sum < best_sum) {
                best = e;
                best_sum = sum;
            }
        }
        rec.edge = *best;
        rec.degree_sum = best_sum;
        rec.mu = best_sum > 2 * target ? best_sum - 2 * target : 0;

        rec.removed = g.delete_step(rec.edge);
        rec.removed_total = rec.removed.size();
        std::set<ColorId> touched;
        for (const Edge& e : rec.removed) {
            touched.insert(e.color);
            if (e.color == rec.chosen_color && !(e == rec.edge)) {
                ++rec.same_color_removed;
            }
        }
        for (ColorId c : touched) {
            if (g.color_class_size(c) == 0) {
                rec.exhausted_colors.push_back(c);
            }
        }
        matching.push_back(rec.edge);
        trace.steps.push_back(std::move(rec));
    }
    trace.k = matching.size();

    std::set<VertexId> covered;
    std::set<ColorId> used;
    for (const Edge& e : matching) {
        covered.insert(e.u);
        covered.insert(e.v);
        used.insert(e.color);
    }
    std::set<VertexId> uncovered;
    for (VertexId v : start_vertices) {
        if (!covered.contains(v)) {
            uncovered.insert(v);
        }
    }
    trace.uncovered.assign(uncovered.begin(), uncovered.end());

    for (const GreedyStepRecord& rec : trace.steps) {
        std::size_t f = 0;
        for (const Edge& e : rec.removed) {
            if (e.color == rec.chosen_color && uncovered.contains(e.u) && uncovered.contains(e.v)) {
                ++f;
            }
        }
        trace.f.push_back(f);
        for (ColorId c : rec.exhausted_colors) {
            if (!used.contains(c)) {
                trace.h = rec.index;
            }
        }
    }
    return {std::move(matching), std::move(trace)};
}

namespace {

void report(std::vector<TraceViolation>& out, std::string code, std::size_t step,
            std::string detail) {
    out.push_back({std::move(code), step, std::move(detail)});
}

std::string str(std::size_t x) { return std::to_string(x); }

}  // namespace

std::vector<TraceViolation> check_trace(const GreedyTrace& trace, std::size_t core_edge_count) {
    std::vector<TraceViolation> out;
    const std::size_t t = trace.target;
    const auto& steps = trace.steps;

    if (trace.k != steps.size() || trace.f.size() != steps.size()) {
        report(out, "step_count", 0,
               "k=" + str(trace.k) + " steps=" + str(steps.size()) + " f=" + str(trace.f.size()));
    }

    std::size_t total = 0;
    for (std::size_t pos = 0; pos < steps.size(); ++pos) {
        const GreedyStepRecord& s = steps[pos];
        const std::size_t i = pos + 1;
        total += s.removed_total;

        if (pos + 1 < steps.size() && steps[pos + 1].class_size + 2 < s.class_size) {
            report(out, "class_size_drop", i + 1,
                   "c_" + str(i + 1) + "=" + str(steps[pos + 1].class_size) + " but c_" + str(i) +
                       "=" + str(s.class_size));
        }
        if (i <= trace.h && s.class_size > 2 * (trace.h - i + 1)) {
            report(out, "class_size_envelope", i,
                   "c_" + str(i) + "=" + str(s.class_size) + " > 2(h-i+1)=" +
                       str(2 * (trace.h - i + 1)));
        }
        const std::size_t f = pos < trace.f.size() ? trace.f[pos] : 0;
        if (f > s.same_color_removed || s.same_color_removed + 1 > s.class_size) {
            report(out, "same_color_bound", i,
                   "f=" + str(f) + " g=" + str(s.same_color_removed) + " c=" + str(s.class_size));
        }
        const std::size_t expected_mu = s.degree_sum > 2 * t ? s.degree_sum - 2 * t : 0;
        if (s.mu != expected_mu) {
            report(out, "mu_definition", i,
                   "mu=" + str(s.mu) + " but degree sum " + str(s.degree_sum) + " gives " +
                       str(expected_mu));
        }
        if (t >= 2 && s.mu + 3 > 2 * t) {
            report(out, "mu_range", i, "mu=" + str(s.mu) + " > 2t-3=" + str(2 * t - 3));
        }
        if (s.removed_total + 1 > 2 * t + s.mu + s.same_color_removed) {
            report(out, "removal_bound", i,
                   "removed " + str(s.removed_total) + " > 2t+mu+g-1=" +
                       str(2 * t + s.mu + s.same_color_removed - 1));
        }
        // After step h only colors still owed to the matching remain, so each
        // endpoint has degree at most k-i+1.
        if (i > trace.h && trace.k + 1 >= i && s.degree_sum > 2 * (trace.k - i + 1)) {
            report(out, "tail_degree_sum", i,
                   "degree sum " + str(s.degree_sum) + " > 2(k-i+1)=" + str(2 * (trace.k - i + 1)));
        }
    }
    if (total != core_edge_count) {
        report(out, "edge_conservation", 0,
               "removed " + str(total) + " edges, core has " + str(core_edge_count));
    }
    return out;
}

PipelineReport find_rainbow_matching(const ColoredGraph& g, bool use_triangle_free) {
    PipelineReport report;
    report.n = g.vertex_count();
    report.delta = g.min_degree();
    report.used_triangle_free = use_triangle_free && g.is_triangle_free();

    if (report.delta == 0) {
        report.chain.core = g;
        report.guarantee_applies = true;
        report.guarantee_met = true;
        return report;
    }

    report.chain = reduce(g, report.used_triangle_free);
    for (const ReductionStep& step : report.chain.steps) {
        (step.kind == StepKind::VertexRemoval ? report.vertex_removals : report.class_removals)++;
    }

    auto [core_matching, trace] = greedy_matching(report.chain.core, report.chain.core_target);
    report.trace = std::move(trace);
    if (core_matching.size() >= report.chain.core_target) {
        core_matching.resize(report.chain.core_target);
        report.matching = extend_through_chain(report.chain, std::move(core_matching));
    } else {
        report.matching = std::move(core_matching);
    }

    report.threshold_value = threshold(report.delta, report.used_triangle_free);
    report.guarantee_applies = report.threshold_value->below(static_cast<std::int64_t>(report.n));
    report.guarantee_met = report.guarantee_applies && report.matching.size() == report.delta;
    return report;
}

}  // namespace rainbow

#include "rainbow/reduction.hpp"

#include <algorithm>
#include <set>

namespace rainbow {

std::string_view to_string(StepKind kind) {
    return kind == StepKind::VertexRemoval ? "vertex" : "color_class";
}

std::vector<Edge> trim(ColoredGraph& g, std::size_t target) {
    if (g.min_degree() < target) {
        throw Error(ErrorCode::TargetExceedsMinDegree,
                    "trim target " + std::to_string(target) + " exceeds minimum degree " +
                        std::to_string(g.min_degree()));
    }
    std::vector<Edge> removed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : g.edges()) {
            if (g.degree(e.u) > target && g.degree(e.v) > target) {
                g.delete_edge(e);
                removed.push_back(e);
                changed = true;
            }
        }
    }
    return removed;
}

ReductionChain reduce(ColoredGraph g, bool triangle_free_rule) {
    ReductionChain chain;
    chain.triangle_free_rule = triangle_free_rule && g.is_triangle_free();
    std::size_t target = g.min_degree();
    chain.initial_target = target;
    if (target > 0) {
        chain.initial_trimmed = trim(g, target);
    }

    while (target > 0) {
        const std::size_t degree_cap = chain.triangle_free_rule ? 2 * target - 2 : 3 * target - 3;
        ReductionStep step;
        step.target_before = target;
        if (g.max_degree() > degree_cap) {
            step.kind = StepKind::VertexRemoval;
            step.removed_vertex = g.max_degree_vertex();
            step.primary_removed = g.delete_vertex(step.removed_vertex);
        } else if (!g.empty() && g.largest_color_class().second >= 2 * target - 1) {
            step.kind = StepKind::ColorClassRemoval;
            step.removed_color = g.largest_color_class().first;
            step.primary_removed = g.delete_color_class(step.removed_color);
        } else {
            break;
        }
        --target;
        step.trimmed = trim(g, target);
        step.min_degree_after = g.min_degree();
        chain.steps.push_back(std::move(step));
    }

    chain.core_target = target;
    chain.core = std::move(g);
    return chain;
}

Matching extend(Matching matching, const ReductionStep& step, const ColoredGraph& graph_at_step) {
    if (matching.size() + 1 != step.target_before) {
        throw Error(ErrorCode::ExtensionFailed,
                    "matching has " + std::to_string(matching.size()) + " edges, expected " +
                        std::to_string(step.target_before - 1));
    }
    std::set<VertexId> covered;
    std::set<ColorId> used;
    for (const Edge& e : matching) {
        covered.insert(e.u);
        covered.insert(e.v);
        used.insert(e.color);
    }
    const bool vertex_step = step.kind == StepKind::VertexRemoval;
    const std::vector<Edge> candidates = vertex_step
                                             ? graph_at_step.incident_edges(step.removed_vertex)
                                             : graph_at_step.color_class(step.removed_color);
    for (const Edge& e : candidates) {
        if (!covered.contains(e.u) && !covered.contains(e.v) && !used.contains(e.color)) {
            matching.push_back(e);
            return matching;
        }
    }
    throw Error(ErrorCode::ExtensionFailed,
                std::string("no free edge at removed ") +
                    (vertex_step ? "vertex " + std::to_string(step.removed_vertex)
                                 : "color " + std::to_string(step.removed_color)) +
                    " among " + std::to_string(candidates.size()) + " candidates");
}

void unapply(ColoredGraph& g, const ReductionStep& step) {
    g.restore(step.trimmed);
    if (step.kind == StepKind::VertexRemoval) {
        g.restore_vertex(step.removed_vertex);
    }
    g.restore(step.primary_removed);
}

Matching extend_through_chain(const ReductionChain& chain, Matching core_matching) {
    ColoredGraph g = chain.core;
    Matching m = std::move(core_matching);
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        unapply(g, *it);
        m = extend(std::move(m), *it, g);
    }
    return m;
}

}  // namespace rainbow

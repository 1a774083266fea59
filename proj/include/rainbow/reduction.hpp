#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class StepKind { VertexRemoval, ColorClassRemoval };

std::string_view to_string(StepKind kind);

/// One level of the reduction sequence: a vertex or color-class removal
/// followed by a trim pass at the decremented target.
struct ReductionStep {
    StepKind kind = StepKind::VertexRemoval;
    VertexId removed_vertex = 0;  // VertexRemoval only
    ColorId removed_color = 0;    // ColorClassRemoval only
    std::vector<Edge> primary_removed;
    std::vector<Edge> trimmed;
    std::size_t target_before = 0;
    /// Minimum degree of the graph after this step; equals target_before - 1
    /// unless the graph ran out of edges.
    std::size_t min_degree_after = 0;
};

struct ReductionChain {
    std::size_t initial_target = 0;
    std::vector<Edge> initial_trimmed;
    std::vector<ReductionStep> steps;
    ColoredGraph core;
    std::size_t core_target = 0;
    bool triangle_free_rule = false;  // true only if requested and confirmed
};

/// Deletes, in edge order, every edge whose endpoints both have degree
/// strictly greater than `target`, re-scanning until a pass changes nothing.
/// Afterwards each remaining edge touches a vertex of degree exactly target.
std::vector<Edge> trim(ColoredGraph& g, std::size_t target);

/// Builds the reduction sequence. The max-degree rule is checked first
/// (threshold 3t-3, or 2t-2 with the triangle-free rule), then the
/// color-class rule (some class with at least 2t-1 edges).
ReductionChain reduce(ColoredGraph g, bool triangle_free_rule);

/// Adds one edge to `matching` undoing `step`; `graph_at_step` is the graph
/// as it was right before the step was applied.
Matching extend(Matching matching, const ReductionStep& step, const ColoredGraph& graph_at_step);

/// Undoes `step` on the graph that resulted from it.
void unapply(ColoredGraph& g, const ReductionStep& step);

/// Folds extend over the chain, from the core back to the trimmed input.
/// `core_matching` must have exactly core_target edges.
Matching extend_through_chain(const ReductionChain& chain, Matching core_matching);

}  // namespace rainbow

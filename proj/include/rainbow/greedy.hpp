#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/reduction.hpp"

namespace rainbow {

/// Exact non-negative rational, always stored in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::int64_t floor() const { return num / den; }
    /// true iff value < n
    bool below(std::int64_t n) const { return num < n * den; }

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Order bound above which a rainbow matching of size delta is guaranteed:
/// 13d/2 - 23/2 + 41/(8d) in general, 49d/8 - 21/2 + 9/(2d) for
/// triangle-free graphs. Throws ZeroDelta for delta == 0.
Rational threshold(std::size_t delta, bool triangle_free);

struct GreedyStepRecord {
    std::size_t index = 0;  // 1-based
    ColorId chosen_color = 0;
    std::size_t class_size = 0;  // c_i: size of the smallest class
    Edge edge;                   // e_i
    std::size_t degree_sum = 0;  // d_i(x_i) + d_i(y_i)
    std::size_t mu = 0;          // max(0, degree_sum - 2 * target)
    std::size_t removed_total = 0;
    std::size_t same_color_removed = 0;  // g_i: color-i edges removed other than e_i
    std::vector<Edge> removed;
    std::vector<ColorId> exhausted_colors;  // classes emptied by this step
};

struct GreedyTrace {
    std::size_t target = 0;
    std::size_t initial_edge_count = 0;
    std::vector<GreedyStepRecord> steps;
    std::size_t k = 0;
    std::vector<VertexId> uncovered;  // R
    std::vector<std::size_t> f;       // f_i, parallel to steps
    std::size_t h = 0;                // 0 when no absent color was ever exhausted
};

/// Greedy matcher: repeatedly take the smallest color class, pick its edge of
/// minimum endpoint degree sum, keep it, and delete it together with its
/// neighbourhood and the rest of its class.
std::pair<Matching, GreedyTrace> greedy_matching(ColoredGraph core, std::size_t target);

struct TraceViolation {
    std::string code;
    std::size_t step = 0;  // 0 for trace-wide checks
    std::string detail;
};

/// Checks the step inequalities of a greedy run. Violation codes:
///   step_count, class_size_drop, class_size_envelope, same_color_bound,
///   mu_definition, mu_range, removal_bound, edge_conservation,
///   tail_degree_sum.
std::vector<TraceViolation> check_trace(const GreedyTrace& trace, std::size_t core_edge_count);

struct PipelineReport {
    Matching matching;
    std::size_t delta = 0;  // minimum degree of the input
    std::size_t n = 0;
    std::optional<Rational> threshold_value;  // empty when delta == 0
    bool guarantee_applies = false;           // n > threshold (or delta == 0)
    bool guarantee_met = false;               // guarantee_applies && |matching| == delta
    bool used_triangle_free = false;
    std::size_t vertex_removals = 0;
    std::size_t class_removals = 0;
    ReductionChain chain;
    GreedyTrace trace;
};

PipelineReport find_rainbow_matching(const ColoredGraph& g, bool use_triangle_free);

}  // namespace rainbow

#pragma once

// Test-only reference implementations. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::testing {

inline std::vector<Edge> E(std::initializer_list<std::array<std::uint32_t, 3>> list) {
    std::vector<Edge> out;
    for (const auto& t : list) out.push_back(Edge{t[0], t[1], t[2]});
    return out;
}

/// Direct pairwise check of the rainbow matching definition.
inline bool naive_is_rainbow_matching(const std::vector<Edge>& graph_edges,
                                      const std::vector<Edge>& m) {
    for (const Edge& e : m) {
        bool found = false;
        for (const Edge& g : graph_edges) {
            if (g == e) found = true;
        }
        if (!found) return false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m[i].color == m[j].color) return false;
            if (m[i].u == m[j].u || m[i].u == m[j].v || m[i].v == m[j].u || m[i].v == m[j].v)
                return false;
        }
    }
    return true;
}

/// Maximum rainbow matching by enumerating all 2^m edge subsets.
inline std::size_t naive_max_rainbow(const std::vector<Edge>& edges) {
    const std::size_t m = edges.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Edge> subset;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) subset.push_back(edges[i]);
        }
        if (subset.size() > best && naive_is_rainbow_matching(edges, subset)) {
            best = subset.size();
        }
    }
    return best;
}

/// Sequential trim rule replayed over an explicit processing order, on a
/// plain edge list with degrees recounted from scratch.
inline std::vector<Edge> trim_in_order(std::vector<Edge> edges, std::size_t target,
                                       const std::vector<std::size_t>& order) {
    auto degree = [&](VertexId x, const std::vector<char>& alive) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (alive[i] && edges[i].touches(x)) ++d;
        return d;
    };
    std::vector<char> alive(edges.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i : order) {
            if (alive[i] && degree(edges[i].u, alive) > target && degree(edges[i].v, alive) > target) {
                alive[i] = 0;
                changed = true;
            }
        }
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (alive[i]) kept.push_back(edges[i]);
    return kept;
}

inline std::size_t plain_degree(const std::vector<Edge>& edges, VertexId x) {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [x](const Edge& e) { return e.touches(x); }));
}

inline std::vector<Edge> sorted(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), edge_order_less);
    return edges;
}

}  // namespace rainbow::testing

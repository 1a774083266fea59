#pragma once

#include <cstddef>

#include "rainbow/graph.hpp"

namespace rainbow {

struct LatinSquare;

inline constexpr std::size_t kDefaultEdgeCap = 40;

struct OracleResult {
    std::size_t max_size = 0;
    Matching witness;
    std::size_t nodes_explored = 0;
};

/// Exact maximum rainbow matching by include/exclude branch-and-bound over
/// the edges in edge order. Throws CapExceeded when the graph has more than
/// `edge_cap` edges.
OracleResult max_rainbow_matching(const ColoredGraph& g, std::size_t edge_cap = kDefaultEdgeCap);

/// Same search, stopping at the first rainbow matching of size k.
bool has_rainbow_matching_of_size(const ColoredGraph& g, std::size_t k,
                                  std::size_t edge_cap = kDefaultEdgeCap);

/// A transversal is a perfect rainbow matching of the square's K_{n,n}.
bool has_transversal(const LatinSquare& square, std::size_t edge_cap = kDefaultEdgeCap);

}  // namespace rainbow

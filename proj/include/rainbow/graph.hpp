#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

using VertexId = std::uint32_t;
using ColorId = std::uint32_t;

/// An undirected colored edge. Endpoints are stored with u < v once an edge
/// has passed through a ColoredGraph; use Edge::make to normalize by hand.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    ColorId color = 0;

    static Edge make(VertexId a, VertexId b, ColorId c) {
        return a <= b ? Edge{a, b, c} : Edge{b, a, c};
    }

    VertexId low() const { return u < v ? u : v; }
    VertexId high() const { return u < v ? v : u; }
    bool touches(VertexId x) const { return u == x || v == x; }

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.low() == b.low() && a.high() == b.high() && a.color == b.color;
    }
};

/// Deterministic edge order used everywhere a tie has to be broken:
/// (min endpoint, max endpoint), then color.
bool edge_order_less(const Edge& a, const Edge& b);

using Matching = std::vector<Edge>;

enum class MatchingFault { None, UnknownEdge, SharedVertex, DuplicateColor };

struct MatchingVerdict {
    MatchingFault fault = MatchingFault::None;
    std::string message;

    bool ok() const { return fault == MatchingFault::None; }
};

/// Simple, properly edge-colored graph with deletion and restore support.
///
/// Vertex ids are arbitrary 32-bit values; internally they are compacted to
/// dense indices in increasing id order, so the dense order agrees with the
/// id order. The master edge table is kept sorted by edge_order_less and
/// never shrinks: deleting an edge only unlinks it from the adjacency lists
/// and the color classes, which is what lets restore() replay a removal log.
class ColoredGraph {
public:
    ColoredGraph() = default;

    /// Validates and builds. `extra_vertices` adds isolated vertices.
    static ColoredGraph build(std::span<const Edge> edges,
                              std::span<const VertexId> extra_vertices = {});

    std::size_t vertex_count() const { return present_count_; }
    std::size_t edge_count() const { return alive_count_; }
    bool empty() const { return alive_count_ == 0; }

    bool has_vertex(VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::size_t color_degree(VertexId v) const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;

    /// Present vertices, increasing id.
    std::vector<VertexId> vertices() const;
    /// Live edges in edge_order_less order.
    std::vector<Edge> edges() const;
    std::vector<Edge> incident_edges(VertexId v) const;
    std::vector<Edge> color_class(ColorId c) const;
    std::size_t color_class_size(ColorId c) const;
    std::vector<ColorId> colors() const;
    std::size_t color_count() const { return classes_.size(); }
    std::optional<Edge> find_edge(VertexId a, VertexId b) const;
    bool contains(const Edge& e) const;

    /// Color with the fewest live edges; ties go to the smallest color.
    std::pair<ColorId, std::size_t> smallest_color_class() const;
    /// Color with the most live edges; ties go to the smallest color.
    std::pair<ColorId, std::size_t> largest_color_class() const;
    /// Smallest id among the vertices of maximum degree.
    VertexId max_degree_vertex() const;

    // Every delete_* returns exactly the edges it removed, in edge order.
    std::vector<Edge> delete_vertex(VertexId v);
    std::vector<Edge> delete_color_class(ColorId c);
    std::vector<Edge> delete_edge(const Edge& e);
    /// Removes e, every edge sharing an endpoint with e, and every other edge
    /// of e's color.
    std::vector<Edge> delete_step(const Edge& e);

    /// Re-inserts edges previously removed from this graph. Endpoints that
    /// were deleted as vertices come back as well.
    void restore(std::span<const Edge> edges);
    void restore_vertex(VertexId v);

    bool is_triangle_free() const;

    MatchingVerdict check_matching(std::span<const Edge> matching) const;
    bool verify_matching(std::span<const Edge> matching) const {
        return check_matching(matching).ok();
    }

private:
    struct EdgeRecord {
        std::uint32_t a = 0;  // dense, a < b
        std::uint32_t b = 0;
        ColorId color = 0;
        bool alive = false;
    };

    std::uint32_t index_of(VertexId v) const;  // throws UnknownVertex
    std::optional<std::uint32_t> find_index(VertexId v) const;
    std::optional<std::uint32_t> find_edge_index(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t require_edge_index(const Edge& e) const;
    Edge to_edge(std::uint32_t idx) const;
    void unlink(std::uint32_t idx);
    void link(std::uint32_t idx);
    std::vector<Edge> remove_indices(std::vector<std::uint32_t> indices);

    std::vector<VertexId> ids_;
    std::vector<char> present_;
    std::size_t present_count_ = 0;
    std::vector<EdgeRecord> table_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::map<ColorId, std::vector<std::uint32_t>> classes_;
    std::size_t alive_count_ = 0;
};

inline ColoredGraph build_graph(std::span<const Edge> edges) {
    return ColoredGraph::build(edges);
}

}  // namespace rainbow

#include "rainbow/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "rainbow/generators.hpp"

namespace rainbow {

namespace {

struct DenseEdge {
    std::uint32_t a;
    std::uint32_t b;
    std::uint32_t color;
};

class Search {
public:
    Search(const ColoredGraph& g, std::size_t goal) : goal_(goal) {
        source_ = g.edges();
        std::map<VertexId, std::uint32_t> vmap;
        std::map<ColorId, std::uint32_t> cmap;
        for (const Edge& e : source_) {
            vmap.emplace(e.u, 0);
            vmap.emplace(e.v, 0);
            cmap.emplace(e.color, 0);
        }
        std::uint32_t next = 0;
        for (auto& [id, idx] : vmap) idx = next++;
        next = 0;
        for (auto& [id, idx] : cmap) idx = next++;
        for (const Edge& e : source_) {
            edges_.push_back({vmap[e.u], vmap[e.v], cmap[e.color]});
        }
        vertex_used_.assign(vmap.size(), 0);
        color_used_.assign(cmap.size(), 0);
        vertex_seen_.assign(vmap.size(), 0);
        color_seen_.assign(cmap.size(), 0);
        ceiling_ = std::min(cmap.size(), vmap.size() / 2);
        goal_ = std::min(goal_, ceiling_);
    }

    OracleResult run() {
        if (!edges_.empty()) {
            dfs(0);
        }
        OracleResult result;
        result.max_size = best_.size();
        for (std::size_t idx : best_) {
            result.witness.push_back(source_[idx]);
        }
        result.nodes_explored = nodes_;
        return result;
    }

private:
    bool compatible(const DenseEdge& e) const {
        return !vertex_used_[e.a] && !vertex_used_[e.b] && !color_used_[e.color];
    }

    // |current| + min(distinct free colors, distinct free vertices / 2) over
    // the compatible edges from `pos` on.
    std::size_t bound(std::size_t pos) {
        ++stamp_;
        std::size_t colors = 0;
        std::size_t vertices = 0;
        for (std::size_t j = pos; j < edges_.size(); ++j) {
            const DenseEdge& e = edges_[j];
            if (!compatible(e)) continue;
            if (color_seen_[e.color] != stamp_) { color_seen_[e.color] = stamp_; ++colors; }
            if (vertex_seen_[e.a] != stamp_) { vertex_seen_[e.a] = stamp_; ++vertices; }
            if (vertex_seen_[e.b] != stamp_) { vertex_seen_[e.b] = stamp_; ++vertices; }
        }
        return current_.size() + std::min(colors, vertices / 2);
    }

    bool done() const { return best_.size() >= goal_; }

    void dfs(std::size_t pos) {
        ++nodes_;
        if (current_.size() > best_.size()) {
            best_ = current_;
        }
        if (done() || bound(pos) <= best_.size()) {
            return;
        }
        std::size_t j = pos;
        while (j < edges_.size() && !compatible(edges_[j])) ++j;
        if (j == edges_.size()) {
            return;
        }
        const DenseEdge& e = edges_[j];
        vertex_used_[e.a] = vertex_used_[e.b] = color_used_[e.color] = 1;
        current_.push_back(j);
        dfs(j + 1);
        current_.pop_back();
        vertex_used_[e.a] = vertex_used_[e.b] = color_used_[e.color] = 0;
        if (done()) {
            return;
        }
        dfs(j + 1);
    }

    std::vector<Edge> source_;
    std::vector<DenseEdge> edges_;
    std::vector<char> vertex_used_;
    std::vector<char> color_used_;
    std::vector<std::size_t> vertex_seen_;
    std::vector<std::size_t> color_seen_;
    std::size_t stamp_ = 0;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::size_t nodes_ = 0;
    std::size_t goal_;
    std::size_t ceiling_ = 0;
};

void check_cap(const ColoredGraph& g, std::size_t edge_cap) {
    if (g.edge_count() > edge_cap) {
        throw Error(ErrorCode::CapExceeded, "graph has " + std::to_string(g.edge_count()) +
                                                " edges, oracle cap is " + std::to_string(edge_cap));
    }
}

}  // namespace

OracleResult max_rainbow_matching(const ColoredGraph& g, std::size_t edge_cap) {
    check_cap(g, edge_cap);
    return Search(g, std::numeric_limits<std::size_t>::max()).run();
}

bool has_rainbow_matching_of_size(const ColoredGraph& g, std::size_t k, std::size_t edge_cap) {
    check_cap(g, edge_cap);
    if (k == 0) {
        return true;
    }
    return Search(g, k).run().max_size >= k;
}

bool has_transversal(const LatinSquare& square, std::size_t edge_cap) {
    if (square.n * square.n > edge_cap) {
        throw Error(ErrorCode::CapExceeded, "square of order " + std::to_string(square.n) +
                                                " has " + std::to_string(square.n * square.n) +
                                                " cells, oracle cap is " + std::to_string(edge_cap));
    }
    return has_rainbow_matching_of_size(latin_to_bipartite(square), square.n, edge_cap);
}

}  // namespace rainbow

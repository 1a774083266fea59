#include "rainbow/graph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

namespace rainbow {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ImproperColoring: return "ImproperColoring";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownColor: return "UnknownColor";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::TargetExceedsMinDegree: return "TargetExceedsMinDegree";
        case ErrorCode::ExtensionFailed: return "ExtensionFailed";
        case ErrorCode::ZeroDelta: return "ZeroDelta";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::ZeroOrder: return "ZeroOrder";
        case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
        case ErrorCode::InvalidLatin: return "InvalidLatin";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool edge_order_less(const Edge& a, const Edge& b) {
    return std::make_tuple(a.low(), a.high(), a.color) <
           std::make_tuple(b.low(), b.high(), b.color);
}

namespace {

std::string describe(const Edge& e) {
    std::ostringstream out;
    out << "(" << e.low() << "," << e.high() << ",c" << e.color << ")";
    return out.str();
}

void erase_value(std::vector<std::uint32_t>& list, std::uint32_t value) {
    auto it = std::find(list.begin(), list.end(), value);
    if (it != list.end()) {
        *it = list.back();
        list.pop_back();
    }
}

}  // namespace

ColoredGraph ColoredGraph::build(std::span<const Edge> edges,
                                 std::span<const VertexId> extra_vertices) {
    ColoredGraph g;
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw Error(ErrorCode::SelfLoop,
                        "self-loop at vertex " + std::to_string(e.u));
        }
        g.ids_.push_back(e.u);
        g.ids_.push_back(e.v);
    }
    g.ids_.insert(g.ids_.end(), extra_vertices.begin(), extra_vertices.end());
    std::sort(g.ids_.begin(), g.ids_.end());
    g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());

    const std::size_t n = g.ids_.size();
    g.present_.assign(n, 1);
    g.present_count_ = n;
    g.adjacency_.assign(n, {});

    g.table_.reserve(edges.size());
    for (const Edge& e : edges) {
        const Edge norm = Edge::make(e.u, e.v, e.color);
        g.table_.push_back({g.index_of(norm.u), g.index_of(norm.v), norm.color, true});
    }
    std::sort(g.table_.begin(), g.table_.end(), [](const EdgeRecord& x, const EdgeRecord& y) {
        return std::tie(x.a, x.b, x.color) < std::tie(y.a, y.b, y.color);
    });
    for (std::size_t i = 1; i < g.table_.size(); ++i) {
        if (g.table_[i - 1].a == g.table_[i].a && g.table_[i - 1].b == g.table_[i].b) {
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge between " + std::to_string(g.ids_[g.table_[i].a]) +
                            " and " + std::to_string(g.ids_[g.table_[i].b]));
        }
    }

    for (std::uint32_t idx = 0; idx < g.table_.size(); ++idx) {
        g.link(idx);
    }
    g.alive_count_ = g.table_.size();

    for (std::uint32_t x = 0; x < n; ++x) {
        std::map<ColorId, std::uint32_t> seen;
        for (std::uint32_t idx : g.adjacency_[x]) {
            auto [it, inserted] = seen.emplace(g.table_[idx].color, idx);
            if (!inserted) {
                std::ostringstream msg;
                msg << "vertex " << g.ids_[x] << " has two edges of color "
                    << g.table_[idx].color << ": " << describe(g.to_edge(it->second))
                    << " and " << describe(g.to_edge(idx));
                throw Error(ErrorCode::ImproperColoring, msg.str());
            }
        }
    }
    return g;
}

std::optional<std::uint32_t> ColoredGraph::find_index(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - ids_.begin());
}

std::uint32_t ColoredGraph::index_of(VertexId v) const {
    auto idx = find_index(v);
    if (!idx) {
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
    }
    return *idx;
}

bool ColoredGraph::has_vertex(VertexId v) const {
    auto idx = find_index(v);
    return idx && present_[*idx];
}

std::size_t ColoredGraph::degree(VertexId v) const {
    auto idx = find_index(v);
    if (!idx || !present_[*idx]) {
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
    }
    return adjacency_[*idx].size();
}

std::size_t ColoredGraph::color_degree(VertexId v) const {
    degree(v);  // presence check
    std::set<ColorId> colors;
    for (std::uint32_t idx : adjacency_[index_of(v)]) {
        colors.insert(table_[idx].color);
    }
    return colors.size();
}

std::size_t ColoredGraph::min_degree() const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        if (present_[x]) {
            best = std::min(best, adjacency_[x].size());
        }
    }
    return present_count_ == 0 ? 0 : best;
}

std::size_t ColoredGraph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        if (present_[x]) {
            best = std::max(best, adjacency_[x].size());
        }
    }
    return best;
}

VertexId ColoredGraph::max_degree_vertex() const {
    if (present_count_ == 0) {
        throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
    }
    std::optional<std::size_t> best;
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        if (present_[x] && (!best || adjacency_[x].size() > adjacency_[*best].size())) {
            best = x;
        }
    }
    return ids_[*best];
}

std::vector<VertexId> ColoredGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(present_count_);
    for (std::size_t x = 0; x < ids_.size(); ++x) {
        if (present_[x]) {
            out.push_back(ids_[x]);
        }
    }
    return out;
}

Edge ColoredGraph::to_edge(std::uint32_t idx) const {
    const EdgeRecord& r = table_[idx];
    return Edge{ids_[r.a], ids_[r.b], r.color};
}

std::vector<Edge> ColoredGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(alive_count_);
    for (std::uint32_t idx = 0; idx < table_.size(); ++idx) {
        if (table_[idx].alive) {
            out.push_back(to_edge(idx));
        }
    }
    return out;
}

std::vector<Edge> ColoredGraph::incident_edges(VertexId v) const {
    degree(v);  // presence check
    std::vector<std::uint32_t> list = adjacency_[index_of(v)];
    std::sort(list.begin(), list.end());
    std::vector<Edge> out;
    out.reserve(list.size());
    for (std::uint32_t idx : list) {
        out.push_back(to_edge(idx));
    }
    return out;
}

std::vector<Edge> ColoredGraph::color_class(ColorId c) const {
    auto it = classes_.find(c);
    if (it == classes_.end()) {
        return {};
    }
    std::vector<std::uint32_t> list = it->second;
    std::sort(list.begin(), list.end());
    std::vector<Edge> out;
    out.reserve(list.size());
    for (std::uint32_t idx : list) {
        out.push_back(to_edge(idx));
    }
    return out;
}

std::size_t ColoredGraph::color_class_size(ColorId c) const {
    auto it = classes_.find(c);
    return it == classes_.end() ? 0 : it->second.size();
}

std::vector<ColorId> ColoredGraph::colors() const {
    std::vector<ColorId> out;
    out.reserve(classes_.size());
    for (const auto& [c, list] : classes_) {
        out.push_back(c);
    }
    return out;
}

std::optional<std::uint32_t> ColoredGraph::find_edge_index(std::uint32_t a,
                                                           std::uint32_t b) const {
    if (a > b) {
        std::swap(a, b);
    }
    auto it = std::lower_bound(table_.begin(), table_.end(), std::make_pair(a, b),
                               [](const EdgeRecord& r, const std::pair<std::uint32_t, std::uint32_t>& key) {
                                   return std::tie(r.a, r.b) < std::tie(key.first, key.second);
                               });
    if (it == table_.end() || it->a != a || it->b != b) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - table_.begin());
}

std::optional<Edge> ColoredGraph::find_edge(VertexId a, VertexId b) const {
    auto ia = find_index(a);
    auto ib = find_index(b);
    if (!ia || !ib) {
        return std::nullopt;
    }
    auto idx = find_edge_index(*ia, *ib);
    if (!idx || !table_[*idx].alive) {
        return std::nullopt;
    }
    return to_edge(*idx);
}

bool ColoredGraph::contains(const Edge& e) const {
    auto found = find_edge(e.u, e.v);
    return found && found->color == e.color;
}

std::uint32_t ColoredGraph::require_edge_index(const Edge& e) const {
    auto ia = find_index(e.u);
    auto ib = find_index(e.v);
    if (ia && ib) {
        auto idx = find_edge_index(*ia, *ib);
        if (idx && table_[*idx].alive && table_[*idx].color == e.color) {
            return *idx;
        }
    }
    throw Error(ErrorCode::UnknownEdge, "unknown edge " + describe(e));
}

std::pair<ColorId, std::size_t> ColoredGraph::smallest_color_class() const {
    if (classes_.empty()) {
        throw Error(ErrorCode::EmptyGraph, "graph has no edges");
    }
    auto best = classes_.begin();
    for (auto it = classes_.begin(); it != classes_.end(); ++it) {
        if (it->second.size() < best->second.size()) {
            best = it;
        }
    }
    return {best->first, best->second.size()};
}

std::pair<ColorId, std::size_t> ColoredGraph::largest_color_class() const {
    if (classes_.empty()) {
        throw Error(ErrorCode::EmptyGraph, "graph has no edges");
    }
    auto best = classes_.begin();
    for (auto it = classes_.begin(); it != classes_.end(); ++it) {
        if (it->second.size() > best->second.size()) {
            best = it;
        }
    }
    return {best->first, best->second.size()};
}

void ColoredGraph::link(std::uint32_t idx) {
    EdgeRecord& r = table_[idx];
    r.alive = true;
    adjacency_[r.a].push_back(idx);
    adjacency_[r.b].push_back(idx);
    classes_[r.color].push_back(idx);
}

void ColoredGraph::unlink(std::uint32_t idx) {
    EdgeRecord& r = table_[idx];
    r.alive = false;
    erase_value(adjacency_[r.a], idx);
    erase_value(adjacency_[r.b], idx);
    auto it = classes_.find(r.color);
    erase_value(it->second, idx);
    if (it->second.empty()) {
        classes_.erase(it);
    }
}

std::vector<Edge> ColoredGraph::remove_indices(std::vector<std::uint32_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    std::vector<Edge> removed;
    removed.reserve(indices.size());
    for (std::uint32_t idx : indices) {
        removed.push_back(to_edge(idx));
        unlink(idx);
    }
    alive_count_ -= indices.size();
    return removed;
}

std::vector<Edge> ColoredGraph::delete_vertex(VertexId v) {
    degree(v);  // presence check
    const std::uint32_t x = index_of(v);
    auto removed = remove_indices(adjacency_[x]);
    present_[x] = 0;
    --present_count_;
    return removed;
}

std::vector<Edge> ColoredGraph::delete_color_class(ColorId c) {
    auto it = classes_.find(c);
    if (it == classes_.end()) {
        throw Error(ErrorCode::UnknownColor, "unknown color " + std::to_string(c));
    }
    return remove_indices(it->second);
}

std::vector<Edge> ColoredGraph::delete_edge(const Edge& e) {
    return remove_indices({require_edge_index(e)});
}

std::vector<Edge> ColoredGraph::delete_step(const Edge& e) {
    const std::uint32_t idx = require_edge_index(e);
    const EdgeRecord& r = table_[idx];
    std::vector<std::uint32_t> doomed = adjacency_[r.a];
    doomed.insert(doomed.end(), adjacency_[r.b].begin(), adjacency_[r.b].end());
    const auto& cls = classes_.at(r.color);
    doomed.insert(doomed.end(), cls.begin(), cls.end());
    return remove_indices(std::move(doomed));
}

void ColoredGraph::restore_vertex(VertexId v) {
    const std::uint32_t x = index_of(v);
    if (!present_[x]) {
        present_[x] = 1;
        ++present_count_;
    }
}

void ColoredGraph::restore(std::span<const Edge> edges) {
    for (const Edge& e : edges) {
        auto ia = find_index(e.u);
        auto ib = find_index(e.v);
        std::optional<std::uint32_t> idx;
        if (ia && ib) {
            idx = find_edge_index(*ia, *ib);
        }
        if (!idx || table_[*idx].color != e.color) {
            throw Error(ErrorCode::UnknownEdge,
                        "edge " + describe(e) + " was never part of this graph");
        }
        if (table_[*idx].alive) {
            throw Error(ErrorCode::DuplicateEdge, "edge " + describe(e) + " is already present");
        }
        restore_vertex(e.u);
        restore_vertex(e.v);
        link(*idx);
        ++alive_count_;
    }
}

bool ColoredGraph::is_triangle_free() const {
    std::vector<char> mark(ids_.size(), 0);
    for (const EdgeRecord& r : table_) {
        if (!r.alive) {
            continue;
        }
        for (std::uint32_t idx : adjacency_[r.a]) {
            const EdgeRecord& s = table_[idx];
            mark[s.a == r.a ? s.b : s.a] = 1;
        }
        bool found = false;
        for (std::uint32_t idx : adjacency_[r.b]) {
            const EdgeRecord& s = table_[idx];
            if (mark[s.a == r.b ? s.b : s.a]) {
                found = true;
            }
        }
        for (std::uint32_t idx : adjacency_[r.a]) {
            const EdgeRecord& s = table_[idx];
            mark[s.a == r.a ? s.b : s.a] = 0;
        }
        if (found) {
            return false;
        }
    }
    return true;
}

MatchingVerdict ColoredGraph::check_matching(std::span<const Edge> matching) const {
    std::map<VertexId, Edge> covered;
    std::map<ColorId, Edge> used;
    for (const Edge& e : matching) {
        if (!contains(e)) {
            return {MatchingFault::UnknownEdge, "unknown edge " + describe(e) + " is not in the graph"};
        }
        for (VertexId x : {e.u, e.v}) {
            auto [it, inserted] = covered.emplace(x, e);
            if (!inserted) {
                return {MatchingFault::SharedVertex, "shared vertex " + std::to_string(x) +
                                                         " between " + describe(it->second) +
                                                         " and " + describe(e)};
            }
        }
        auto [it, inserted] = used.emplace(e.color, e);
        if (!inserted) {
            return {MatchingFault::DuplicateColor, "duplicate color " + std::to_string(e.color) +
                                                       " on " + describe(it->second) + " and " +
                                                       describe(e)};
        }
    }
    return {};
}

}  // namespace rainbow

#include "rainbow/generators.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "text_util.hpp"

namespace rainbow {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorCode::InvalidArgument, "Rng::below needs a positive bound");
    }
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit) {
        x = next();
    }
    return x % bound;
}

std::vector<std::uint32_t> Rng::permutation(std::size_t n) {
    std::vector<std::uint32_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = n; i > 1; --i) {
        std::swap(p[i - 1], p[below(i)]);
    }
    return p;
}

void validate_latin(const LatinSquare& square) {
    const std::size_t n = square.n;
    if (square.cells.size() != n * n) {
        throw Error(ErrorCode::InvalidLatin, "expected " + std::to_string(n * n) + " cells, found " +
                                                 std::to_string(square.cells.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> in_row(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t s = square.at(i, j);
            if (s >= n) {
                throw Error(ErrorCode::InvalidLatin, "row " + std::to_string(i) + ", column " +
                                                         std::to_string(j) + ": symbol " +
                                                         std::to_string(s) + " is out of range");
            }
            if (in_row[s]++) {
                throw Error(ErrorCode::InvalidLatin, "row " + std::to_string(i) + ", column " +
                                                         std::to_string(j) + ": symbol " +
                                                         std::to_string(s) + " repeats in the row");
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<char> in_col(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (in_col[square.at(i, j)]++) {
                throw Error(ErrorCode::InvalidLatin, "row " + std::to_string(i) + ", column " +
                                                         std::to_string(j) + ": symbol " +
                                                         std::to_string(square.at(i, j)) +
                                                         " repeats in the column");
            }
        }
    }
}

LatinSquare parse_latin(std::istream& in) {
    LatinSquare square;
    bool have_order = false;
    std::string line;
    std::size_t line_no = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_data_line(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!have_order) {
            if (tokens.size() != 1) {
                throw Error(ErrorCode::Parse, where + "expected the order n on its own line");
            }
            square.n = detail::parse_u32(tokens[0], line_no);
            if (square.n == 0) {
                throw Error(ErrorCode::ZeroOrder, where + "order must be positive");
            }
            have_order = true;
            continue;
        }
        if (rows == square.n) {
            throw Error(ErrorCode::Parse, where + "more than " + std::to_string(square.n) + " rows");
        }
        if (tokens.size() != square.n) {
            throw Error(ErrorCode::Parse, where + "row " + std::to_string(rows) + " has " +
                                              std::to_string(tokens.size()) + " entries, expected " +
                                              std::to_string(square.n));
        }
        for (auto token : tokens) {
            square.cells.push_back(detail::parse_u32(token, line_no));
        }
        ++rows;
    }
    if (!have_order) {
        throw Error(ErrorCode::Parse, "missing order line");
    }
    if (rows != square.n) {
        throw Error(ErrorCode::Parse, "expected " + std::to_string(square.n) + " rows, found " +
                                          std::to_string(rows));
    }
    validate_latin(square);
    return square;
}

LatinSquare read_latin(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot open " + path.string());
    }
    return parse_latin(in);
}

void write_latin(std::ostream& out, const LatinSquare& square) {
    out << square.n << '\n';
    for (std::size_t i = 0; i < square.n; ++i) {
        for (std::size_t j = 0; j < square.n; ++j) {
            out << (j ? " " : "") << square.at(i, j);
        }
        out << '\n';
    }
}

LatinSquare cyclic_latin(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::ZeroOrder, "Latin square order must be positive");
    }
    LatinSquare square{n, std::vector<std::uint32_t>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            square.cells[i * n + j] = static_cast<std::uint32_t>((i + j) % n);
        }
    }
    return square;
}

LatinSquare permute_latin(const LatinSquare& square, std::span<const std::uint32_t> rows,
                          std::span<const std::uint32_t> cols,
                          std::span<const std::uint32_t> symbols) {
    const std::size_t n = square.n;
    if (rows.size() != n || cols.size() != n || symbols.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "permutations must have length n");
    }
    LatinSquare out{n, std::vector<std::uint32_t>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.cells[i * n + j] = symbols[square.at(rows[i], cols[j])];
        }
    }
    validate_latin(out);
    return out;
}

LatinSquare shuffled_latin(const LatinSquare& square, std::uint64_t seed) {
    Rng rng(seed);
    const auto rows = rng.permutation(square.n);
    const auto cols = rng.permutation(square.n);
    const auto symbols = rng.permutation(square.n);
    return permute_latin(square, rows, cols, symbols);
}

ColoredGraph latin_to_bipartite(const LatinSquare& square) {
    validate_latin(square);
    const auto n = static_cast<VertexId>(square.n);
    std::vector<Edge> edges;
    edges.reserve(square.cells.size());
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = 0; j < n; ++j) {
            edges.push_back(Edge{i, n + j, square.at(i, j)});
        }
    }
    return ColoredGraph::build(edges);
}

ColoredGraph complete_bipartite_colored(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) {
        throw Error(ErrorCode::InvalidArgument, "both sides of K_{a,b} must be non-empty");
    }
    const std::size_t colors = std::max(a, b);
    std::vector<Edge> edges;
    edges.reserve(a * b);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            edges.push_back(Edge{static_cast<VertexId>(i), static_cast<VertexId>(a + j),
                                 static_cast<ColorId>((i + j) % colors)});
        }
    }
    return ColoredGraph::build(edges);
}

std::vector<Edge> greedy_edge_coloring(std::vector<std::pair<VertexId, VertexId>> pairs) {
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    std::map<VertexId, std::set<ColorId>> used;
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const auto& ua = used[a];
        const auto& ub = used[b];
        ColorId c = 0;
        while (ua.contains(c) || ub.contains(c)) ++c;
        used[a].insert(c);
        used[b].insert(c);
        edges.push_back(Edge{a, b, c});
    }
    return edges;
}

namespace {

using Adjacency = std::vector<std::set<VertexId>>;

void connect(Adjacency& adj, std::vector<std::pair<VertexId, VertexId>>& pairs, VertexId a,
             VertexId b) {
    adj[a].insert(b);
    adj[b].insert(a);
    pairs.emplace_back(a, b);
}

}  // namespace

ColoredGraph random_properly_colored(std::size_t n, std::size_t delta, std::uint64_t seed) {
    if (delta == 0 || delta >= n) {
        throw Error(ErrorCode::InfeasibleDegree, "need n > delta >= 1, got n=" + std::to_string(n) +
                                                     " delta=" + std::to_string(delta));
    }
    Rng rng(seed);
    Adjacency adj(n);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < n; ++v) {
        while (adj[v].size() < delta) {
            auto w = static_cast<VertexId>(rng.below(n));
            if (w != v && !adj[v].contains(w)) {
                connect(adj, pairs, v, w);
            }
        }
    }
    return ColoredGraph::build(greedy_edge_coloring(std::move(pairs)));
}

ColoredGraph random_bipartite_colored(std::size_t na, std::size_t nb, std::size_t delta,
                                      std::uint64_t seed) {
    if (delta == 0 || delta > std::min(na, nb)) {
        throw Error(ErrorCode::InfeasibleDegree,
                    "need 1 <= delta <= min(na, nb), got na=" + std::to_string(na) +
                        " nb=" + std::to_string(nb) + " delta=" + std::to_string(delta));
    }
    Rng rng(seed);
    Adjacency adj(na + nb);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    auto fill = [&](std::size_t first, std::size_t count, std::size_t other_first,
                    std::size_t other_count) {
        for (std::size_t v = first; v < first + count; ++v) {
            while (adj[v].size() < delta) {
                auto w = static_cast<VertexId>(other_first + rng.below(other_count));
                if (!adj[v].contains(w)) {
                    connect(adj, pairs, static_cast<VertexId>(v), w);
                }
            }
        }
    };
    fill(0, na, na, nb);
    fill(na, nb, 0, na);
    return ColoredGraph::build(greedy_edge_coloring(std::move(pairs)));
}

}  // namespace rainbow

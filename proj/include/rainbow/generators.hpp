#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// n x n array over symbols [0, n), row-major.
struct LatinSquare {
    std::size_t n = 0;
    std::vector<std::uint32_t> cells;

    std::uint32_t at(std::size_t row, std::size_t col) const { return cells[row * n + col]; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

/// Throws InvalidLatin naming the first offending row/column.
void validate_latin(const LatinSquare& square);

/// Text format: first data line "n", then n rows of n symbols. '#' lines are
/// comments. The Latin property is checked while parsing.
LatinSquare parse_latin(std::istream& in);
LatinSquare read_latin(const std::filesystem::path& path);
void write_latin(std::ostream& out, const LatinSquare& square);

/// Seeded generator shared by every instance factory. The engine is
/// std::mt19937_64, whose output sequence is fixed by the C++ standard;
/// bounded draws use rejection sampling rather than the implementation-defined
/// std distributions, so instances are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Fisher-Yates permutation of 0..n-1.
    std::vector<std::uint32_t> permutation(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// cells[i][j] = (i + j) mod n. Throws ZeroOrder for n == 0.
LatinSquare cyclic_latin(std::size_t n);

/// new[i][j] = symbols[old[rows[i]][cols[j]]].
LatinSquare permute_latin(const LatinSquare& square, std::span<const std::uint32_t> rows,
                          std::span<const std::uint32_t> cols,
                          std::span<const std::uint32_t> symbols);

/// Seeded row, column and symbol permutations.
LatinSquare shuffled_latin(const LatinSquare& square, std::uint64_t seed);

/// Rows become vertices 0..n-1, columns n..2n-1, edge (i, n+j) gets color
/// cells[i][j].
ColoredGraph latin_to_bipartite(const LatinSquare& square);

/// K_{a,b} on 0..a-1 and a..a+b-1 with color (i + j) mod max(a, b).
ColoredGraph complete_bipartite_colored(std::size_t a, std::size_t b);

/// Random simple graph on 0..n-1 with minimum degree >= delta, greedily
/// properly colored. Requires n > delta >= 1.
ColoredGraph random_properly_colored(std::size_t n, std::size_t delta, std::uint64_t seed);

/// Random bipartite graph (sides 0..na-1 and na..na+nb-1) with minimum degree
/// >= delta, greedily properly colored. Requires 1 <= delta <= min(na, nb).
ColoredGraph random_bipartite_colored(std::size_t na, std::size_t nb, std::size_t delta,
                                      std::uint64_t seed);

/// Gives each edge, in edge order, the smallest color unused at both ends.
std::vector<Edge> greedy_edge_coloring(std::vector<std::pair<VertexId, VertexId>> pairs);

}  // namespace rainbow

#include <doctest.h>

#include <sstream>

#include "rainbow/edge_list.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

bool is_latin(const LatinSquare& l) {
    try {
        validate_latin(l);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

TEST_CASE("rng reference outputs") {
    // std::mt19937_64 default-seeded: the standard fixes the 10000th output.
    Rng reference(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = reference.next();
    CHECK(x == 9981545732273789042ull);

    Rng one(1);
    CHECK(one.next() == 2469588189546311528ull);
    CHECK(one.next() == 2516265689700432462ull);
    CHECK(one.next() == 8323445853463659930ull);
}

TEST_CASE("rng bounded draws and permutations") {
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.below(7) < 7);
    }
    auto p = rng.permutation(50);
    std::sort(p.begin(), p.end());
    for (std::uint32_t i = 0; i < 50; ++i) CHECK(p[i] == i);
    CHECK_THROWS_AS(rng.below(0), Error);
}

TEST_CASE("cyclic latin squares") {
    CHECK(cyclic_latin(1).cells == std::vector<std::uint32_t>{0});
    CHECK(cyclic_latin(2).cells == std::vector<std::uint32_t>{0, 1, 1, 0});
    CHECK(cyclic_latin(3).cells == std::vector<std::uint32_t>{0, 1, 2, 1, 2, 0, 2, 0, 1});
    CHECK_THROWS_AS(cyclic_latin(0), Error);
}

TEST_CASE("shuffled latin squares stay latin") {
    const LatinSquare base = cyclic_latin(5);
    const std::vector<std::uint32_t> id{0, 1, 2, 3, 4};
    CHECK(permute_latin(base, id, id, id) == base);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(is_latin(shuffled_latin(base, seed)));
    }
    CHECK(shuffled_latin(base, 7) == shuffled_latin(base, 7));
    CHECK(is_latin(shuffled_latin(cyclic_latin(3), 1)));
    CHECK(is_latin(shuffled_latin(cyclic_latin(3), 2)));
}

TEST_CASE("latin to bipartite") {
    const ColoredGraph one = latin_to_bipartite(cyclic_latin(1));
    CHECK(one.edges() == std::vector<Edge>{Edge{0, 1, 0}});

    const ColoredGraph two = latin_to_bipartite(cyclic_latin(2));
    CHECK(two.edge_count() == 4);
    CHECK(two.color_class_size(0) == 2);
    CHECK(two.color_class_size(1) == 2);

    for (std::size_t n = 1; n <= 8; ++n) {
        const ColoredGraph g = latin_to_bipartite(cyclic_latin(n));
        CHECK(g.min_degree() == n);
        CHECK(g.max_degree() == n);
        CHECK(g.color_count() == n);
        for (ColorId c : g.colors()) CHECK(g.color_class_size(c) == n);
        CHECK(g.is_triangle_free());
    }
    const ColoredGraph shuffled = latin_to_bipartite(shuffled_latin(cyclic_latin(6), 4));
    CHECK(shuffled.edge_count() == 36);
}

TEST_CASE("complete bipartite colored") {
    CHECK(complete_bipartite_colored(1, 1).edge_count() == 1);
    const ColoredGraph k23 = complete_bipartite_colored(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.color_count() == 3);
    const ColoredGraph k436 = complete_bipartite_colored(4, 36);
    CHECK(k436.min_degree() == 4);
    CHECK(k436.vertex_count() == 40);
    CHECK_THROWS_AS(complete_bipartite_colored(0, 3), Error);
}

TEST_CASE("random properly colored graphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 3 + seed % 40;
        const std::size_t delta = 1 + seed % std::min<std::size_t>(n - 1, 8);
        const ColoredGraph g = random_properly_colored(n, delta, seed);
        REQUIRE(g.vertex_count() == n);
        REQUIRE(g.min_degree() >= delta);
        REQUIRE(g.color_count() <= 2 * g.max_degree() - 1);
    }
    const ColoredGraph small = random_properly_colored(5, 1, 42);
    CHECK(small.min_degree() >= 1);
    CHECK(random_properly_colored(27, 4, 9).edges() == random_properly_colored(27, 4, 9).edges());
    CHECK_THROWS_AS(random_properly_colored(4, 4, 1), Error);
    CHECK_THROWS_AS(random_properly_colored(4, 0, 1), Error);
    // Complete graphs are reachable.
    CHECK(random_properly_colored(6, 5, 1).edge_count() == 15);
}

TEST_CASE("random bipartite colored graphs") {
    const ColoredGraph k33 = random_bipartite_colored(3, 3, 3, 5);
    CHECK(k33.edge_count() == 9);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ColoredGraph g = random_bipartite_colored(20, 20, 4, seed);
        REQUIRE(g.min_degree() >= 4);
        REQUIRE(g.is_triangle_free());
        for (const Edge& e : g.edges()) {
            REQUIRE(((e.u < 20) != (e.v < 20)));
        }
    }
    CHECK_THROWS_AS(random_bipartite_colored(2, 5, 3, 1), Error);
}

TEST_CASE("greedy edge coloring is proper and small") {
    const auto edges = greedy_edge_coloring({{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    const ColoredGraph g = ColoredGraph::build(edges);
    CHECK(g.edge_count() == 4);
    CHECK(g.color_count() <= 2 * g.max_degree() - 1);
}

"""Rainbow matchings of size delta(G) in properly edge-colored graphs."""

from ._rainbow import (
    ColoredGraph,
    RainbowError,
    complete_bipartite,
    cyclic_latin,
    find_rainbow_matching,
    has_transversal,
    latin_graph,
    max_rainbow_matching,
    random_bipartite_colored,
    random_properly_colored,
    threshold,
)

__all__ = [
    "ColoredGraph",
    "RainbowError",
    "complete_bipartite",
    "cyclic_latin",
    "find_rainbow_matching",
    "has_transversal",
    "latin_graph",
    "max_rainbow_matching",
    "random_bipartite_colored",
    "random_properly_colored",
    "threshold",
]

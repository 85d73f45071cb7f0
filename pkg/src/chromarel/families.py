"""Named graph families, fixed instances, and exhaustive enumeration."""

from __future__ import annotations

import random
from typing import Iterator

from .graphs import Graph, is_connected


def path_graph(n: int) -> Graph:
    """Path on n vertices, ids in path order."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(n: int) -> Graph:
    """Wheel with an n-vertex rim (ids 0..n-1) and the hub as the last id."""
    if n < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def mycielski(g: Graph) -> Graph:
    """Mycielski construction: 2n+1 vertices, 3m+n edges, chi goes up by one.

    Vertex i gets a shadow n+i adjacent to i's neighbors; a final apex 2n is
    adjacent to every shadow.
    """
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges.append((n + u, v))
        edges.append((u, n + v))
    apex = 2 * n
    edges += [(n + i, apex) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def moser_spindle() -> Graph:
    """Two triangle rhombi sharing vertex 0, far tips 3 and 6 joined.

    Seven vertices, eleven edges, planar, chromatic number four.
    """
    edges = [
        (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
        (0, 4), (0, 5), (4, 5), (4, 6), (5, 6),
        (3, 6),
    ]
    return Graph.from_edges(7, edges)


def grotzsch() -> Graph:
    """The Mycielskian of the 5-cycle: triangle-free with chromatic number 4."""
    return mycielski(cycle_graph(5))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner 5-star 5..9, spokes i to 5+i."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n,p) from a seeded generator; deterministic per seed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0,1]")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


_FIXED = {
    "moser_spindle": moser_spindle,
    "moser": moser_spindle,
    "grotzsch": grotzsch,
    "petersen": petersen,
}


def generate(family: str, *args) -> Graph:
    """Build a family member from its name and parameters.

    Names: path, cycle, complete, wheel (one integer each), bipartite (two
    integers), gnp (n, p, seed), mycielski (a nested family token), and the
    fixed instances moser_spindle, grotzsch, petersen. Compact aliases like
    p4, c5, k4, w5 work too.
    """
    name = family.lower()
    if name in _FIXED:
        if args:
            raise ValueError(f"{name} takes no parameters")
        return _FIXED[name]()
    if name == "mycielski":
        if not args:
            raise ValueError("mycielski needs a base family")
        return mycielski(generate(str(args[0]), *args[1:]))
    if name == "gnp":
        if len(args) != 3:
            raise ValueError("gnp needs n, p, seed")
        return gnp(int(args[0]), float(args[1]), int(args[2]))
    if name == "bipartite":
        if len(args) != 2:
            raise ValueError("bipartite needs both part sizes")
        return complete_bipartite(int(args[0]), int(args[1]))
    simple = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "wheel": wheel_graph,
    }
    if name in simple:
        if len(args) != 1:
            raise ValueError(f"{name} needs exactly one size parameter")
        return simple[name](int(args[0]))
    if len(name) >= 2 and name[0] in "pckw" and name[1:].isdigit():
        key = {"p": "path", "c": "cycle", "k": "complete", "w": "wheel"}[name[0]]
        if args:
            raise ValueError(f"{name} takes no parameters")
        return simple[key](int(name[1:]))
    raise ValueError(f"unknown family {family!r}")


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labeled graph on n vertices, 1 <= n <= 7, in edge-mask order."""
    if not 1 <= n <= 7:
        raise ValueError("enumeration supports 1 <= n <= 7")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    npairs = len(pairs)
    for mask in range(1 << npairs):
        rows = [0] * n
        for b in range(npairs):
            if mask >> b & 1:
                i, j = pairs[b]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph._make(n, tuple(rows))
        if connected_only and not is_connected(g):
            continue
        yield g

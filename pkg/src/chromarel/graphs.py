"""Immutable simple graphs on dense integer ids, with bitset adjacency."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class EditError(ValueError):
    """Raised when a graph edit's precondition is violated."""


def _bits(x: int) -> Iterator[int]:
    """Yield the set bit positions of x in ascending order."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


class Graph:
    """Undirected simple graph whose vertices are exactly 0..n-1.

    Adjacency is stored as one integer bit row per vertex: bit v of
    ``rows[u]`` is set iff uv is an edge. Instances are immutable; every
    destructive operation returns a new Graph plus an EditTrace describing
    how ids moved.
    """

    __slots__ = ("n", "rows", "labels", "_chi")

    def __init__(self, n: int, rows: Iterable[int], labels: tuple[str, ...] | None = None):
        rows = tuple(rows)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        for u, row in enumerate(rows):
            if row < 0 or row >> n:
                raise ValueError(f"row {u} references vertices outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(n):
            for v in _bits(rows[u]):
                if not rows[v] >> u & 1:
                    raise ValueError(f"edge {u}-{v} lacks its mirror entry")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must have one entry per vertex")
        self.n = n
        self.rows = rows
        self.labels = labels
        self._chi: int | None = None

    @classmethod
    def _make(cls, n: int, rows: tuple[int, ...], labels: tuple[str, ...] | None = None) -> Graph:
        # Trusted fast path: callers guarantee symmetry and loop-freeness.
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g.labels = labels
        g._chi = None
        return g

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), labels)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        return list(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"vertex {u} outside 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class EditKind(Enum):
    DELETE_VERTEX = "delete_vertex"
    DELETE_EDGE = "delete_edge"
    ADD_EDGE = "add_edge"
    IDENTIFY = "identify"
    CONTRACT_EDGE = "contract_edge"
    SUBDIVIDE_EDGE = "subdivide_edge"


@dataclass(frozen=True)
class EditTrace:
    """How vertex ids moved under an edit.

    id_map sends every old id to its new id, or to None when the vertex was
    removed outright. Identified or contracted endpoints both map to the
    replacement vertex. new_vertex is set iff the edit created a vertex.
    """

    kind: EditKind
    id_map: dict[int, int | None]
    new_vertex: int | None = None


@dataclass(frozen=True)
class DeleteVertex:
    u: int


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int


Edit = DeleteVertex | DeleteEdge | AddEdge


def _identity_map(n: int) -> dict[int, int | None]:
    return {u: u for u in range(n)}


def delete_vertex(g: Graph, u: int) -> tuple[Graph, EditTrace]:
    """Remove vertex u; higher ids shift down by one."""
    if not (0 <= u < g.n):
        raise EditError(f"vertex {u} outside 0..{g.n - 1}")
    low = (1 << u) - 1
    rows = tuple(
        (r & low) | (r >> (u + 1)) << u
        for x, r in enumerate(g.rows)
        if x != u
    )
    labels = None
    if g.labels is not None:
        labels = tuple(lab for x, lab in enumerate(g.labels) if x != u)
    id_map: dict[int, int | None] = {
        x: (x if x < u else x - 1) for x in range(g.n) if x != u
    }
    id_map[u] = None
    return Graph._make(g.n - 1, rows, labels), EditTrace(EditKind.DELETE_VERTEX, id_map)


def delete_edge(g: Graph, u: int, v: int) -> tuple[Graph, EditTrace]:
    if not g.has_edge(u, v):
        raise EditError(f"edge ({u},{v}) not present")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return (
        Graph._make(g.n, tuple(rows), g.labels),
        EditTrace(EditKind.DELETE_EDGE, _identity_map(g.n)),
    )


def add_edge(g: Graph, u: int, v: int) -> tuple[Graph, EditTrace]:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise EditError(f"loop at vertex {u}")
    if g.has_edge(u, v):
        raise EditError(f"edge ({u},{v}) already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return (
        Graph._make(g.n, tuple(rows), g.labels),
        EditTrace(EditKind.ADD_EDGE, _identity_map(g.n)),
    )


def mutate(g: Graph, edit: Edit) -> tuple[Graph, EditTrace]:
    """Apply a single edit descriptor."""
    if isinstance(edit, DeleteVertex):
        return delete_vertex(g, edit.u)
    if isinstance(edit, DeleteEdge):
        return delete_edge(g, edit.u, edit.v)
    if isinstance(edit, AddEdge):
        return add_edge(g, edit.u, edit.v)
    raise TypeError(f"not an edit: {edit!r}")


def _merge_pair(g: Graph, u: int, v: int, kind: EditKind) -> tuple[Graph, EditTrace]:
    # Shared by identify (uv must be absent) and contract (uv removed first).
    a, b = min(u, v), max(u, v)
    w = g.n - 2

    def f(x: int) -> int:
        if x == u or x == v:
            return w
        return x - (x > a) - (x > b)

    edges = set()
    for x, y in g.edges():
        if {x, y} == {u, v}:
            continue
        fx, fy = f(x), f(y)
        edges.add((min(fx, fy), max(fx, fy)))
    id_map: dict[int, int | None] = {x: f(x) for x in range(g.n)}
    h = Graph.from_edges(g.n - 1, sorted(edges))
    return h, EditTrace(kind, id_map, new_vertex=w)


def identify_vertices(g: Graph, u: int, v: int) -> tuple[Graph, EditTrace]:
    """Merge nonadjacent u and v into a new vertex with the union neighborhood."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise EditError("cannot identify a vertex with itself")
    if g.has_edge(u, v):
        raise EditError(f"({u},{v}) is an edge; use contract_edge")
    return _merge_pair(g, u, v, EditKind.IDENTIFY)


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, EditTrace]:
    """Contract the edge uv into a new vertex with the union neighborhood."""
    if not g.has_edge(u, v):
        raise EditError(f"edge ({u},{v}) not present")
    return _merge_pair(g, u, v, EditKind.CONTRACT_EDGE)


def subdivide_edge(g: Graph, u: int, v: int) -> tuple[Graph, EditTrace]:
    """Replace edge uv with a path u-w-v through a fresh vertex w."""
    if not g.has_edge(u, v):
        raise EditError(f"edge ({u},{v}) not present")
    w = g.n
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    rows[u] |= 1 << w
    rows[v] |= 1 << w
    rows.append(1 << u | 1 << v)
    labels = None
    if g.labels is not None:
        labels = g.labels + (str(w),)
    id_map: dict[int, int | None] = _identity_map(g.n)
    return (
        Graph._make(g.n + 1, tuple(rows), labels),
        EditTrace(EditKind.SUBDIVIDE_EDGE, id_map, new_vertex=w),
    )


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on `keep`, renumbered densely in ascending old order.

    Returns the subgraph and the old-id to new-id mapping.
    """
    kept = sorted(set(keep))
    for x in kept:
        g._check_vertex(x)
    id_map = {x: i for i, x in enumerate(kept)}
    rows = []
    for x in kept:
        row = 0
        r = g.rows[x]
        for y in kept:
            if r >> y & 1:
                row |= 1 << id_map[y]
        rows.append(row)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[x] for x in kept)
    return Graph._make(len(kept), tuple(rows), labels), id_map


def delete_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove a vertex set; returns the rest with its old-to-new id mapping."""
    dropped = set(drop)
    return induced_subgraph(g, (x for x in range(g.n) if x not in dropped))


def _component_masks(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the components, each ascending, ordered by least vertex."""
    return [list(_bits(mask)) for mask in _component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(_component_masks(g)) <= 1


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The unique per-component 2-part split, or None if an odd cycle exists.

    Within each component the part containing the least vertex goes left, so
    the result is deterministic.
    """
    side = [0] * g.n  # 0 unvisited, 1 left, 2 right
    left = right = 0
    for s in range(g.n):
        if side[s]:
            continue
        side[s] = 1
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in _bits(g.rows[u]):
                    if side[v] == 0:
                        side[v] = 3 - side[u]
                        nxt.append(v)
                    elif side[v] == side[u]:
                        return None
            frontier = nxt
    for u in range(g.n):
        if side[u] == 1:
            left |= 1 << u
        else:
            right |= 1 << u
    return frozenset(_bits(left)), frozenset(_bits(right))


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    g._check_vertex(u)
    g._check_vertex(v)
    return frozenset(_bits(g.rows[u] & g.rows[v]))


def independent_sets(
    g: Graph,
    must_include: Iterable[int] = (),
    mode: str = "all",
) -> Iterator[frozenset[int]]:
    """Enumerate independent sets containing `must_include`.

    mode "all" yields every such set, mode "maximal" only the maximal ones.
    Order is deterministic: lexicographic in the sorted vertex tuple, with the
    seed set first.
    """
    if mode not in ("all", "maximal"):
        raise ValueError(f"unknown mode {mode!r}")
    base = 0
    for x in must_include:
        g._check_vertex(x)
        base |= 1 << x
    for x in _bits(base):
        if g.rows[x] & base:
            raise ValueError("must_include is not independent")
    closed = base
    for x in _bits(base):
        closed |= g.rows[x]
    cands = [v for v in range(g.n) if not (closed >> v & 1)]

    def emit(mask: int) -> Iterator[frozenset[int]]:
        if mode == "maximal":
            blocked = mask
            for x in _bits(mask):
                blocked |= g.rows[x]
            if blocked != (1 << g.n) - 1:
                return
        yield frozenset(_bits(mask))

    def rec(mask: int, avail: list[int]) -> Iterator[frozenset[int]]:
        yield from emit(mask)
        for i, v in enumerate(avail):
            nxt = [w for w in avail[i + 1 :] if not (g.rows[v] >> w & 1)]
            yield from rec(mask | 1 << v, nxt)

    return rec(base, cands)

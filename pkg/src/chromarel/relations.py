"""Implicit chromatic relations, criticality, and non-extensible precolorings.

A pair {u,v} of a k-chromatic graph (k = chi(g)) is an implicit edge when no
coloring of g-uv into {1..k} gives u and v the same color, and an implicit
identity when none gives them different colors. The edge uv is removed first
when present, so the relations are independent of adjacency. Each relation
can be decided two ways: by direct colorability (the definition route) or by
searching for an independent set whose removal drops the chromatic number
(the set route). scan_relations runs both and refuses to return if they ever
disagree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .coloring import Precoloring, chromatic_number, k_colorable
from .graphs import (
    Graph,
    add_edge,
    delete_edge,
    delete_vertex,
    delete_vertices,
    independent_sets,
)
from .graphs import identify_vertices


class RelationKind(Enum):
    EDGE = "edge"
    IDENTITY = "identity"


@dataclass(frozen=True)
class ImplicitRelation:
    u: int
    v: int
    kind: RelationKind
    k: int  # chromatic level at which the relation holds
    witness_route: str  # "definition" or "independent-set"
    adjacent: bool  # whether uv was an edge of the original graph


class RouteDisagreementError(RuntimeError):
    """The definition route and the set route returned different answers.

    This is never expected; it indicates a defect in one of the two engines.
    """

    def __init__(self, g: Graph, u: int, v: int, kind: RelationKind,
                 definition_answer: bool, set_answer: bool):
        from .io import serialize_graph

        self.graph6 = serialize_graph(g, "graph6")
        self.u = u
        self.v = v
        self.kind = kind
        self.definition_answer = definition_answer
        self.set_answer = set_answer
        super().__init__(
            f"route disagreement on pair ({u},{v}) kind={kind.value} of "
            f"{self.graph6!r}: definition={definition_answer} set={set_answer}"
        )


def _pair_check(g: Graph, u: int, v: int) -> None:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("pair endpoints must differ")


def _without_edge(g: Graph, u: int, v: int) -> Graph:
    return delete_edge(g, u, v)[0] if g.has_edge(u, v) else g


def is_implicit_edge(g: Graph, u: int, v: int) -> bool:
    """True iff no coloring of g-uv into {1..chi(g)} makes u and v equal.

    Equal colors on u,v are achievable exactly when the graph obtained by
    identifying u and v in g-uv is still chi(g)-colorable.
    """
    _pair_check(g, u, v)
    k = chromatic_number(g)
    h = _without_edge(g, u, v)
    merged, _ = identify_vertices(h, u, v)
    return k_colorable(merged, k) is None


def is_implicit_identity(g: Graph, u: int, v: int) -> bool:
    """True iff no coloring of g-uv into {1..chi(g)} makes u and v differ.

    Distinct colors are achievable exactly when (g-uv)+uv = g+uv is
    chi(g)-colorable; for adjacent pairs that graph is g itself.
    """
    _pair_check(g, u, v)
    k = chromatic_number(g)
    target = g if g.has_edge(u, v) else add_edge(g, u, v)[0]
    return k_colorable(target, k) is None


def implicit_via_sets(g: Graph, u: int, v: int, kind: RelationKind) -> bool:
    """Decide a relation through the independent-set characterization.

    Edge: {u,v} is an implicit edge iff no independent set of g-uv contains
    both endpoints and has chi(g - S) < chi(g). Identity: {u,v} is an
    implicit identity iff no independent set of g-u contains v and has
    chi(g - S) < chi(g).
    """
    _pair_check(g, u, v)
    k = chromatic_number(g)
    if kind is RelationKind.EDGE:
        h = _without_edge(g, u, v)
        for s in independent_sets(h, (u, v)):
            rest, _ = delete_vertices(g, s)
            if chromatic_number(rest) < k:
                return False
        return True
    if kind is RelationKind.IDENTITY:
        h, trace = delete_vertex(g, u)
        back = {new: old for old, new in trace.id_map.items() if new is not None}
        for s in independent_sets(h, (trace.id_map[v],)):
            rest, _ = delete_vertices(g, (back[x] for x in s))
            if chromatic_number(rest) < k:
                return False
        return True
    raise ValueError(f"unknown relation kind {kind!r}")


def scan_relations(g: Graph, cross_validate: bool = True) -> list[ImplicitRelation]:
    """Classify every unordered pair at k = chi(g).

    With cross_validate (the default) every answer is recomputed through the
    independent-set route and any disagreement aborts the scan.
    """
    k = chromatic_number(g)
    out: list[ImplicitRelation] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            edge_rel = is_implicit_edge(g, u, v)
            ident_rel = is_implicit_identity(g, u, v)
            if cross_validate:
                edge_sets = implicit_via_sets(g, u, v, RelationKind.EDGE)
                if edge_rel != edge_sets:
                    raise RouteDisagreementError(g, u, v, RelationKind.EDGE, edge_rel, edge_sets)
                ident_sets = implicit_via_sets(g, u, v, RelationKind.IDENTITY)
                if ident_rel != ident_sets:
                    raise RouteDisagreementError(
                        g, u, v, RelationKind.IDENTITY, ident_rel, ident_sets
                    )
            if edge_rel and ident_rel:
                # g-uv has a coloring into {1..k}, so one of the two must fail
                raise RuntimeError(
                    f"pair ({u},{v}) classified as both edge and identity; "
                    "the solver is inconsistent"
                )
            if edge_rel or ident_rel:
                out.append(
                    ImplicitRelation(
                        u,
                        v,
                        RelationKind.EDGE if edge_rel else RelationKind.IDENTITY,
                        k,
                        "definition",
                        g.has_edge(u, v),
                    )
                )
    return out


def is_critical_independent_set(g: Graph, s) -> bool:
    """True iff removing the independent set s drops chi by exactly one."""
    s = frozenset(s)
    for x in s:
        g._check_vertex(x)
        if any((g.rows[x] >> y) & 1 for y in s):
            raise ValueError("s is not independent")
    rest, _ = delete_vertices(g, s)
    return chromatic_number(rest) == chromatic_number(g) - 1


def critical_independent_sets(g: Graph, avoid=()):
    """Yield the critical independent sets disjoint from `avoid`."""
    k = chromatic_number(g)
    banned = frozenset(avoid)
    for s in independent_sets(g):
        if not s or s & banned:
            continue
        rest, _ = delete_vertices(g, s)
        if chromatic_number(rest) == k - 1:
            yield s


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    critical_vertices: tuple[int, ...]
    critical_edges: tuple[tuple[int, int], ...]
    is_vertex_critical: bool
    is_critical: bool
    is_double_critical: bool


def criticality(g: Graph) -> CriticalityReport:
    """Which vertices and edges lower chi when removed, plus summary flags."""
    k = chromatic_number(g)
    crit_v = []
    for u in range(g.n):
        rest, _ = delete_vertex(g, u)
        if chromatic_number(rest) < k:
            crit_v.append(u)
    crit_e = []
    for u, v in g.edges():
        rest, _ = delete_edge(g, u, v)
        if chromatic_number(rest) < k:
            crit_e.append((u, v))
    edges = g.edges()
    double = True
    for u, v in edges:
        rest, _ = delete_vertices(g, (u, v))
        if chromatic_number(rest) != k - 2:
            double = False
            break
    vertex_critical = len(crit_v) == g.n
    return CriticalityReport(
        k=k,
        critical_vertices=tuple(crit_v),
        critical_edges=tuple(crit_e),
        is_vertex_critical=vertex_critical,
        is_critical=vertex_critical and len(crit_e) == len(edges),
        is_double_critical=double,
    )


@dataclass(frozen=True)
class NonExtensibleCertificate:
    """A proper precoloring with no completion, minimal by construction.

    The sweep that produces it tries every smaller size first, so every
    proper sub-precoloring of the certificate extends.
    """

    precoloring: Precoloring
    k: int
    exhausted: bool = True

    @property
    def size(self) -> int:
        return len(self.precoloring.assignment)


def _canonical_patterns(domain: tuple[int, ...], g: Graph, k: int):
    """Proper color patterns on `domain`, one per palette-permutation class.

    Classes appear in first-use order (restricted growth), which is exactly
    one representative per orbit of the palette symmetry group.
    """
    size = len(domain)

    def rec(i: int, pattern: list[int], used: int):
        if i == size:
            yield tuple(pattern)
            return
        v = domain[i]
        limit = min(used + 1, k)
        for c in range(1, limit + 1):
            ok = True
            for j in range(i):
                if pattern[j] == c and g.has_edge(domain[j], v):
                    ok = False
                    break
            if ok:
                pattern.append(c)
                yield from rec(i + 1, pattern, max(used, c))
                pattern.pop()

    yield from rec(0, [], 0)


def min_nonextensible(g: Graph, k: int, max_size: int = 3) -> NonExtensibleCertificate | None:
    """Smallest non-extensible proper precoloring with at most max_size vertices.

    Sweeps sizes in increasing order, pruning palette permutations, and stops
    at the first certificate. None means every proper precoloring of size up
    to max_size extends to a full coloring into {1..k}; nothing is claimed
    about larger sizes.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    for size in range(1, max_size + 1):
        for domain in itertools.combinations(range(g.n), size):
            for pattern in _canonical_patterns(domain, g, k):
                pre = Precoloring(dict(zip(domain, pattern)), k)
                if k_colorable(g, k, pre) is None:
                    return NonExtensibleCertificate(pre, k)
    return None


def relation_report(g: Graph) -> dict:
    """The combined relation and criticality summary as plain JSON data."""
    rels = scan_relations(g)
    crit = criticality(g)
    return {
        "chi": crit.k,
        "edges": [[r.u, r.v] for r in rels if r.kind is RelationKind.EDGE],
        "identities": [[r.u, r.v] for r in rels if r.kind is RelationKind.IDENTITY],
        "critical_vertices": list(crit.critical_vertices),
        "critical_edges": [[u, v] for u, v in crit.critical_edges],
        "double_critical": crit.is_double_critical,
    }


def to_dot(g: Graph, relations=()) -> str:
    """GraphViz text; implicit edges dash red, identities dot blue."""
    styled = {}
    for r in relations:
        key = (min(r.u, r.v), max(r.u, r.v))
        if r.kind is RelationKind.EDGE:
            styled[key] = ' [style=dashed, color=red]'
        else:
            styled[key] = ' [style=dotted, color=blue]'
    lines = ["graph G {"]
    for u in range(g.n):
        label = g.labels[u] if g.labels is not None else str(u)
        lines.append(f'  {u} [label="{label}"];')
    for u, v in sorted(g.edges()):
        lines.append(f"  {u} -- {v}{styled.pop((u, v), '')};")
    for (u, v), style in sorted(styled.items()):
        lines.append(f"  {u} -- {v}{style};")
    return "\n".join(lines) + "\n"

"""Machine verification of the relation theorems over graph corpora.

Each check filters its hypotheses strictly and evaluates its conclusion on
every instance that qualifies; instances_run counts conclusion evaluations,
so a vacuous pass is visible as instances_run == 0. Failing instances are
embedded in reports as graph6 strings.
"""

from __future__ import annotations

import concurrent.futures
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .coloring import (
    Precoloring,
    chromatic_number,
    colorings,
    k_colorable,
    kempe_chain,
)
from .families import enumerate_graphs, generate, gnp
from .graphs import (
    Graph,
    add_edge,
    bipartition,
    common_neighbors,
    delete_edge,
    delete_vertices,
    is_connected,
    identify_vertices,
    subdivide_edge,
    _bits,
)
from .io import parse_graph, serialize_graph
from .planarity import is_planar
from .polynomial import chromatic_polynomial, evaluate
from .relations import (
    RelationKind,
    criticality,
    critical_independent_sets,
    implicit_via_sets,
    is_implicit_edge,
    is_implicit_identity,
    min_nonextensible,
    scan_relations,
)

_Finding = tuple[str, str, str]  # locus, expected, got
_CheckResult = tuple[int, list[_Finding], list[str]]  # ran, failures, notes


@dataclass(frozen=True)
class CorpusSpec:
    """What to run a check over.

    families are generate() tokens (parameters after colons, e.g. "path:6").
    exhaustive_n adds every connected labeled graph of each order 1..n
    (connected can be relaxed). random adds count seeded G(n,p) samples.
    filters restrict the whole corpus: connected, bipartite, planar, chi=K.
    """

    families: tuple[str, ...] = ()
    exhaustive_n: int | None = None
    exhaustive_connected: bool = True
    random: tuple[int, float, int, int] | None = None  # n, p, seed, count
    filters: tuple[str, ...] = ()


def _passes(g: Graph, filt: str) -> bool:
    if filt == "connected":
        return is_connected(g)
    if filt == "bipartite":
        return bipartition(g) is not None
    if filt == "planar":
        return is_planar(g)
    if filt.startswith("chi="):
        return chromatic_number(g) == int(filt[4:])
    raise ValueError(f"unknown corpus filter {filt!r}")


def iter_corpus(spec: CorpusSpec) -> Iterator[tuple[str, Graph]]:
    """Yield (name, graph) pairs in a deterministic order."""

    def emit(name: str, g: Graph) -> Iterator[tuple[str, Graph]]:
        if all(_passes(g, f) for f in spec.filters):
            yield name, g

    for token in spec.families:
        parts = token.split(":")
        g = generate(parts[0], *parts[1:])
        yield from emit(token, g)
    if spec.exhaustive_n is not None:
        for n in range(1, spec.exhaustive_n + 1):
            for g in enumerate_graphs(n, connected_only=spec.exhaustive_connected):
                yield from emit(serialize_graph(g, "graph6"), g)
    if spec.random is not None:
        n, p, seed, count = spec.random
        for i in range(count):
            yield from emit(f"gnp({n},{p},{seed + i})", gnp(n, p, seed + i))


_SCAN_CACHE: dict[tuple[int, tuple[int, ...]], tuple] = {}
_CRIT_CACHE: dict[tuple[int, tuple[int, ...]], object] = {}


def _relations_of(g: Graph):
    key = (g.n, g.rows)
    hit = _SCAN_CACHE.get(key)
    if hit is None:
        hit = tuple(scan_relations(g))
        _SCAN_CACHE[key] = hit
    return hit


def _criticality_of(g: Graph):
    key = (g.n, g.rows)
    hit = _CRIT_CACHE.get(key)
    if hit is None:
        hit = criticality(g)
        _CRIT_CACHE[key] = hit
    return hit


def _path_parity(g: Graph, u: int, v: int) -> int | None:
    """BFS distance parity from u to v, or None when unreachable."""
    if u == v:
        return 0
    dist = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for x in frontier:
            for y in _bits(g.rows[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        return dist[y] % 2
                    nxt.append(y)
        frontier = nxt
    return None


def _check_bip_ie(g: Graph) -> _CheckResult:
    # On connected bipartite graphs the edge relation is exactly "joined by
    # an odd path once uv is removed".
    if g.m == 0 or not is_connected(g) or bipartition(g) is None:
        return 0, [], []
    ran = 0
    failures: list[_Finding] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            h = delete_edge(g, u, v)[0] if g.has_edge(u, v) else g
            parity = _path_parity(h, u, v)
            expected = parity == 1
            got = is_implicit_edge(g, u, v)
            ran += 1
            if got != expected:
                failures.append((f"pair ({u},{v})", f"edge relation {expected}", str(got)))
    return ran, failures, []


def _check_bip_ii(g: Graph) -> _CheckResult:
    if g.m == 0 or not is_connected(g) or bipartition(g) is None:
        return 0, [], []
    ran = 0
    failures: list[_Finding] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            h = delete_edge(g, u, v)[0] if g.has_edge(u, v) else g
            parity = _path_parity(h, u, v)
            expected = parity == 0
            got = is_implicit_identity(g, u, v)
            ran += 1
            if got != expected:
                failures.append((f"pair ({u},{v})", f"identity relation {expected}", str(got)))
    return ran, failures, []


def _check_ie2(g: Graph) -> _CheckResult:
    ran = 0
    failures: list[_Finding] = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            for kind, decide in (
                (RelationKind.EDGE, is_implicit_edge),
                (RelationKind.IDENTITY, is_implicit_identity),
            ):
                d = decide(g, u, v)
                s = implicit_via_sets(g, u, v, kind)
                ran += 1
                if d != s:
                    failures.append(
                        (f"pair ({u},{v}) {kind.value}", f"definition={d}", f"sets={s}")
                    )
    return ran, failures, []


def _cis_recurse(
    g: Graph,
    u: int,
    v: int,
    kind: RelationKind,
    depth: int,
    desc: str,
    failures: list[_Finding],
) -> int:
    ran = 0
    for s in critical_independent_sets(g, avoid=(u, v)):
        h, idmap = delete_vertices(g, s)
        hu, hv = idmap[u], idmap[v]
        if kind is RelationKind.EDGE:
            holds = is_implicit_edge(h, hu, hv)
        else:
            holds = is_implicit_identity(h, hu, hv)
        ran += 1
        where = f"{desc} minus {sorted(s)}"
        if not holds:
            failures.append((where, f"{kind.value} relation preserved", "lost"))
        elif depth > 1:
            ran += _cis_recurse(h, hu, hv, kind, depth - 1, where, failures)
    return ran


def _check_cis_inv(g: Graph) -> _CheckResult:
    rels = _relations_of(g)
    if not rels:
        return 0, [], []
    k = chromatic_number(g)
    ran = 0
    failures: list[_Finding] = []
    for r in rels:
        ran += _cis_recurse(
            g, r.u, r.v, r.kind, max(1, k - 2), f"pair ({r.u},{r.v})", failures
        )
    return ran, failures, []


def _check_kempe(g: Graph) -> _CheckResult:
    rels = _relations_of(g)
    if not rels:
        return 0, [], []
    k = chromatic_number(g)
    ran = 0
    failures: list[_Finding] = []
    for c in colorings(g, k):
        for r in rels:
            cu, cv = c.color(r.u), c.color(r.v)
            if r.kind is RelationKind.EDGE:
                ran += 1
                if cu == cv:
                    failures.append(
                        (f"edge pair ({r.u},{r.v}) in {c.assignment}", "distinct colors", "equal")
                    )
                    continue
                chain = kempe_chain(g, c, r.u, cv)
                if r.v not in chain.vertices:
                    failures.append(
                        (
                            f"edge pair ({r.u},{r.v}) in {c.assignment}",
                            f"chain on {{{cu},{cv}}} reaches {r.v}",
                            "chain misses it",
                        )
                    )
            else:
                if cu != cv:
                    ran += 1
                    failures.append(
                        (f"identity pair ({r.u},{r.v}) in {c.assignment}", "equal colors", "distinct")
                    )
                    continue
                for i in range(1, k + 1):
                    if i == cu:
                        continue
                    ran += 1
                    chain = kempe_chain(g, c, r.u, i)
                    if r.v not in chain.vertices:
                        failures.append(
                            (
                                f"identity pair ({r.u},{r.v}) in {c.assignment}",
                                f"chain on {{{cu},{i}}} reaches {r.v}",
                                "chain misses it",
                            )
                        )
    return ran, failures, []


def _check_poly_ie(g: Graph) -> _CheckResult:
    rels = [r for r in _relations_of(g) if r.kind is RelationKind.EDGE]
    if not rels:
        return 0, [], []
    k = chromatic_number(g)
    ran = 0
    failures: list[_Finding] = []
    for r in rels:
        h = delete_edge(g, r.u, r.v)[0] if g.has_edge(r.u, r.v) else g
        merged, _ = identify_vertices(h, r.u, r.v)
        val = evaluate(chromatic_polynomial(merged), k)
        ran += 1
        if val != 0:
            failures.append((f"pair ({r.u},{r.v})", f"P(merged, {k}) = 0", str(val)))
    return ran, failures, []


def _check_poly_ii(g: Graph) -> _CheckResult:
    rels = [r for r in _relations_of(g) if r.kind is RelationKind.IDENTITY]
    if not rels:
        return 0, [], []
    k = chromatic_number(g)
    base = evaluate(chromatic_polynomial(g), k)
    ran = 0
    failures: list[_Finding] = []
    for r in rels:
        h = delete_edge(g, r.u, r.v)[0] if g.has_edge(r.u, r.v) else g
        merged, _ = identify_vertices(h, r.u, r.v)
        val = evaluate(chromatic_polynomial(merged), k)
        ran += 1
        if val != base:
            failures.append(
                (f"pair ({r.u},{r.v})", f"P(merged, {k}) = P(g, {k}) = {base}", str(val))
            )
    return ran, failures, []


def _check_planar_add(g: Graph) -> _CheckResult:
    if not is_planar(g) or chromatic_number(g) != 4:
        return 0, [], []
    ran = 0
    failures: list[_Finding] = []
    for r in _relations_of(g):
        if g.has_edge(r.u, r.v):
            continue
        bigger, _ = add_edge(g, r.u, r.v)
        ran += 1
        if is_planar(bigger):
            failures.append(
                (f"{r.kind.value} pair ({r.u},{r.v})", "g+uv nonplanar", "still planar")
            )
    return ran, failures, []


def _check_subdiv(g: Graph) -> _CheckResult:
    k = chromatic_number(g)
    if k < 3 or not _criticality_of(g).is_critical:
        return 0, [], []
    ran = 0
    failures: list[_Finding] = []
    for u, v in g.edges():
        h, trace = subdivide_edge(g, u, v)
        w = trace.new_vertex
        chi_h = chromatic_number(h)
        ran += 1
        if chi_h != k - 1:
            failures.append((f"subdivide ({u},{v})", f"chi = {k - 1}", str(chi_h)))
            continue
        for a, b in ((u, w), (w, v)):
            ran += 1
            if not is_implicit_edge(h, a, b):
                failures.append(
                    (f"subdivide ({u},{v})", f"({a},{b}) is an edge relation", "not a relation")
                )
    return ran, failures, []


def _check_crit_adj(g: Graph) -> _CheckResult:
    rels = _relations_of(g)
    if not rels:
        return 0, [], []
    crit_vertices = _criticality_of(g).critical_vertices
    ran = 0
    failures: list[_Finding] = []
    for r in rels:
        for w in crit_vertices:
            if w == r.u or w == r.v:
                continue
            ran += 1
            if r.kind is RelationKind.IDENTITY:
                if not (g.has_edge(r.u, w) and g.has_edge(r.v, w)):
                    failures.append(
                        (
                            f"identity pair ({r.u},{r.v}), critical vertex {w}",
                            "adjacent to both endpoints",
                            "misses one",
                        )
                    )
            else:
                if not (g.has_edge(r.u, w) or g.has_edge(r.v, w)):
                    failures.append(
                        (
                            f"edge pair ({r.u},{r.v}), critical vertex {w}",
                            "adjacent to an endpoint",
                            "adjacent to neither",
                        )
                    )
    return ran, failures, []


def _check_dc_bound(g: Graph) -> _CheckResult:
    if g.m == 0 or not _criticality_of(g).is_double_critical:
        return 0, [], []
    k = chromatic_number(g)
    ran = 0
    failures: list[_Finding] = []
    notes: list[str] = []
    tight = True
    weak_holds = True
    for u, v in g.edges():
        cn = len(common_neighbors(g, u, v))
        ran += 1
        if cn < k - 2:
            failures.append((f"edge ({u},{v}) common neighbors", f">= {k - 2}", str(cn)))
        if cn != k - 2:
            tight = False
        if cn < k - 1:
            weak_holds = False
    notes.append(f"bound k-2 tight on every edge: {tight}")
    if not weak_holds:
        notes.append("the stronger k-1 bound fails here (evidence against it)")
    if g.m == g.n * (g.n - 1) // 2 and g.n >= 3:
        # complete double-critical instance: confirm the chain mechanism,
        # every coloring of g-uv merges only u,v and each of the k-2 chains
        # runs through its own common neighbor
        for u, v in g.edges():
            h = delete_edge(g, u, v)[0]
            ran += 1
            if not is_implicit_identity(h, u, v):
                failures.append((f"edge ({u},{v})", "identity pair in g-uv", "not identity"))
                continue
            cns = common_neighbors(g, u, v)
            for c in colorings(h, k - 1):
                a = c.color(u)
                if c.color(v) != a:
                    ran += 1
                    failures.append(
                        (f"edge ({u},{v}) coloring {c.assignment}", "u,v share a color", "differ")
                    )
                    continue
                mids = set()
                for i in range(1, k):
                    if i == a:
                        continue
                    ran += 1
                    chain = kempe_chain(h, c, u, i)
                    middle = chain.vertices - {u, v}
                    if (
                        v not in chain.vertices
                        or len(middle) != 1
                        or not middle <= cns
                    ):
                        failures.append(
                            (
                                f"edge ({u},{v}) coloring {c.assignment} chain color {i}",
                                "chain is u-m-v with m a common neighbor",
                                f"chain {sorted(chain.vertices)}",
                            )
                        )
                    else:
                        mids |= middle
                ran += 1
                if len(mids) != k - 2:
                    failures.append(
                        (
                            f"edge ({u},{v}) coloring {c.assignment}",
                            f"{k - 2} distinct chain middles",
                            str(len(mids)),
                        )
                    )
    return ran, failures, notes


def _check_min_pre(g: Graph) -> _CheckResult:
    k = chromatic_number(g)
    ran = 0
    failures: list[_Finding] = []
    for kk in (k, k + 1):
        for v0 in range(g.n):
            ran += 1
            if k_colorable(g, kk, Precoloring({v0: 1}, kk)) is None:
                failures.append((f"size-1 p({v0})=1 at k={kk}", "extends", "stuck"))
    cert = min_nonextensible(g, k, max_size=2)
    rels = _relations_of(g)
    ran += 1
    if (cert is not None) != bool(rels):
        failures.append(
            (
                "size-2 certificate exists",
                str(bool(rels)),
                str(cert is not None),
            )
        )
    if cert is not None and cert.size == 2:
        (a, ca), (b, cb) = sorted(cert.precoloring.assignment.items())
        ran += 1
        if ca == cb:
            if not is_implicit_edge(g, a, b):
                failures.append(
                    (f"certificate pair ({a},{b}) same color", "edge relation", "absent")
                )
        else:
            if not is_implicit_identity(g, a, b):
                failures.append(
                    (f"certificate pair ({a},{b}) distinct colors", "identity relation", "absent")
                )
    return ran, failures, []


CHECKS: dict[str, tuple[Callable[[Graph], _CheckResult], str]] = {
    "BIP-IE": (_check_bip_ie, "bipartite edge relations match odd-path reachability in g-uv"),
    "BIP-II": (_check_bip_ii, "bipartite identity relations match even-path reachability in g-uv"),
    "IE2-EQ": (_check_ie2, "definition route agrees with the independent-set route on every pair"),
    "CIS-INV": (_check_cis_inv, "relations survive removing critical independent sets, iterated"),
    "KEMPE": (_check_kempe, "every coloring carries the chains each relation demands"),
    "POLY-IE": (_check_poly_ie, "edge relations zero the merged graph's polynomial at k"),
    "POLY-II": (_check_poly_ii, "identity relations equate the merged and original polynomials at k"),
    "PLANAR-ADD": (_check_planar_add, "adding a related nonadjacent pair to planar 4-chromatic g breaks planarity"),
    "SUBDIV": (_check_subdiv, "subdividing any edge of a critical graph drops chi and makes both halves edge relations"),
    "CRIT-ADJ": (_check_crit_adj, "critical vertices are adjacent to related pairs as the adjacency theorem demands"),
    "DC-BOUND": (_check_dc_bound, "double-critical graphs have k-2 common neighbors per edge, chains confirmed on complete instances"),
    "MIN-PRE": (_check_min_pre, "single precolored vertices always extend; size-2 certificates appear exactly with relations"),
}


@dataclass
class CheckFailure:
    graph6: str
    locus: str
    expected: str
    got: str

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph6,
            "locus": self.locus,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass
class CheckReport:
    check_id: str
    corpus_size: int
    instances_run: int
    failures: list[CheckFailure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    verdict: str = "pass"

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "check_id": self.check_id,
            "corpus_size": self.corpus_size,
            "instances_run": self.instances_run,
            "failures": [f.to_json_dict() for f in self.failures],
            "notes": self.notes,
            "verdict": self.verdict,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def _eval_instance(args: tuple[str, str]) -> _CheckResult:
    check_id, graph6 = args
    return CHECKS[check_id][0](parse_graph(graph6, "graph6"))


def run_check(
    check_id: str,
    corpus: CorpusSpec | Iterable[tuple[str, Graph]],
    budget: float = 600.0,
    jobs: int = 1,
) -> CheckReport:
    """Evaluate one catalog check over a corpus.

    The budget is wall-clock seconds; exceeding it stops the run with verdict
    "budget-exhausted", which never counts as a pass. Results are identical
    for any jobs value; instances are aggregated in corpus order.
    """
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}")
    start = time.monotonic()
    items = iter_corpus(corpus) if isinstance(corpus, CorpusSpec) else iter(corpus)
    report = CheckReport(check_id=check_id, corpus_size=0, instances_run=0)

    def absorb(name: str, g6: str, result: _CheckResult) -> None:
        ran, failures, notes = result
        report.corpus_size += 1
        report.instances_run += ran
        for locus, expected, got in failures:
            report.failures.append(CheckFailure(g6, locus, expected, got))
        for note in notes:
            report.notes.append(f"{name}: {note}")

    truncated = False
    if jobs <= 1:
        for name, g in items:
            if time.monotonic() - start > budget:
                truncated = True
                break
            absorb(name, serialize_graph(g, "graph6"), CHECKS[check_id][0](g))
    else:
        tagged = [(name, serialize_graph(g, "graph6")) for name, g in items]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(
                _eval_instance,
                [(check_id, g6) for _, g6 in tagged],
                chunksize=max(1, len(tagged) // (jobs * 8) or 1),
            )
            for (name, g6), result in zip(tagged, results):
                if time.monotonic() - start > budget:
                    truncated = True
                    break
                absorb(name, g6, result)
    report.elapsed = time.monotonic() - start
    if truncated:
        report.verdict = "budget-exhausted"
    elif report.failures:
        report.verdict = "fail"
    else:
        report.verdict = "pass"
    return report


def run_checks(
    check_ids: Iterable[str],
    corpus: CorpusSpec,
    budget: float = 600.0,
    jobs: int = 1,
) -> list[CheckReport]:
    return [run_check(cid, corpus, budget=budget, jobs=jobs) for cid in check_ids]


def default_corpus() -> CorpusSpec:
    """Exhaustive connected graphs through n=5 plus the named instances."""
    return CorpusSpec(
        families=(
            "k2", "k3", "k4", "k5", "k6",
            "c5", "c7", "w5",
            "moser_spindle", "grotzsch",
        ),
        exhaustive_n=5,
    )

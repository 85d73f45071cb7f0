"""Graph parsing and serialization.

Three text formats:

* ``dimacs``   classic .col: "c" comment lines, one "p edge <n> <m>" header,
  then "e <u> <v>" lines with 1-based endpoints.
* ``graph6``   the standard ASCII encoding, short form only (n <= 62).
* ``edgelist`` one "u v" pair per line, 0-based, with an optional leading
  "n=<int>" header fixing the vertex count.
"""

from __future__ import annotations

from .graphs import Graph

FORMATS = ("dimacs", "graph6", "edgelist")

_EXTENSIONS = {
    ".col": "dimacs",
    ".dimacs": "dimacs",
    ".g6": "graph6",
    ".graph6": "graph6",
    ".edgelist": "edgelist",
    ".edges": "edgelist",
    ".txt": "edgelist",
}


class FormatError(ValueError):
    """Malformed graph text or an unsupported encoding request."""


def format_for_path(path: str) -> str:
    """Guess a format from a file extension; edgelist is the fallback."""
    dot = path.rfind(".")
    if dot >= 0:
        return _EXTENSIONS.get(path[dot:].lower(), "edgelist")
    return "edgelist"


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise FormatError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return _write_dimacs(g)
    if fmt == "graph6":
        return _write_graph6(g)
    if fmt == "edgelist":
        return _write_edgelist(g)
    raise FormatError(f"unknown format {fmt!r}")


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: second problem line")
            if len(fields) != 4 or fields[1] != "edge":
                raise FormatError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer problem sizes") from None
            if n < 0 or declared_m < 0:
                raise FormatError(f"line {lineno}: negative problem sizes")
        elif fields[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: endpoint outside 1..{n}")
            if u == v:
                raise FormatError(f"line {lineno}: loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise FormatError("missing problem line")
    if len(edges) != declared_m:
        raise FormatError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def _write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in sorted(g.edges()):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def _parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if data[0] == 63:  # chr(126), long-form marker
        raise FormatError("graph6 long form (n > 62) is not supported")
    if not (0 <= data[0] <= 62):
        raise FormatError(f"bad graph6 size byte {s[0]!r}")
    n = data[0]
    for i, val in enumerate(data[1:], start=1):
        if not (0 <= val <= 63):
            raise FormatError(f"byte {i} out of graph6 range: {s[i]!r}")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(data) - 1 != expect:
        raise FormatError(f"expected {expect} data bytes for n={n}, got {len(data) - 1}")
    bits = 0
    for val in data[1:]:
        bits = bits << 6 | val
    pad = expect * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._make(n, tuple(rows))


def _write_graph6(g: Graph) -> str:
    if g.n > 62:
        raise FormatError("graph6 short form requires n <= 62")
    n = g.n
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | (g.rows[i] >> j & 1)
    nbytes = (nbits + 5) // 6
    bits <<= nbytes * 6 - nbits
    chars = [chr(n + 63)]
    for b in range(nbytes - 1, -1, -1):
        chars.append(chr((bits >> (b * 6) & 63) + 63))
    return "".join(chars)


def _parse_edgelist(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    maxv = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if n is not None:
                raise FormatError(f"line {lineno}: second vertex-count header")
            if edges:
                raise FormatError(f"line {lineno}: header after edges")
            try:
                n = int(line[2:])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count") from None
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer endpoints") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
        maxv = max(maxv, u, v)
    if n is None:
        n = maxv + 1
    elif maxv >= n:
        raise FormatError(f"vertex {maxv} outside declared n={n}")
    return Graph.from_edges(n, edges)


def _write_edgelist(g: Graph) -> str:
    lines = [f"n={g.n}"]
    for u, v in sorted(g.edges()):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"

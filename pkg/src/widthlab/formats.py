"""Text formats: graph6, DIMACS edge format, and plain edge lists."""

from __future__ import annotations

from .graphs import Graph


class FormatError(ValueError):
    """Malformed graph text."""


# ---------------------------------------------------------------------------
# graph6 (n <= 62: single size byte, then 6-bit chunks of the upper triangle
# in column-major order, zero-padded, each chunk offset by 63)

GRAPH6_MAX_N = 62


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 writer supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    chunk = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            chunk = chunk << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise FormatError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= GRAPH6_MAX_N:
        raise FormatError(f"unsupported graph6 size byte {s[0]!r}")
    nbits = n * (n - 1) // 2
    nchunks = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nchunks:
        raise FormatError(
            f"graph6 body has {len(body)} chars, expected {nchunks} for n={n}"
        )
    bitstream = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise FormatError(f"graph6 character {ch!r} out of range")
        bitstream = bitstream << 6 | val
    pad = nchunks * 6 - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits in graph6 string")
    bitstream >>= pad
    edges = []
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bitstream >> pos & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# DIMACS edge format


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: malformed problem line {line!r}")
            if n < 0 or declared_m < 0:
                raise FormatError(f"line {lineno}: negative sizes")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise FormatError(f"line {lineno}: malformed edge line {line!r}")
            if u == v:
                raise FormatError(f"line {lineno}: self-loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"line {lineno}: vertex out of range")
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing problem line")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Whitespace edge list, 0-indexed; vertex count inferred from the largest id.


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    tokens = text.split()
    if not tokens:
        return Graph(0, ())
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    # An odd token count means a leading vertex-count header.
    if len(values) % 2 == 1:
        n, values = values[0], values[1:]
        if n < 0:
            raise FormatError("negative vertex count")
    else:
        n = max(values) + 1 if values else 0
    edges = []
    for u, v in zip(values[::2], values[1::2]):
        if u == v:
            raise FormatError(f"self-loop at vertex {u}")
        if u < 0 or v < 0:
            raise FormatError("negative vertex id")
        if u >= n or v >= n:
            raise FormatError(f"vertex id {max(u, v)} exceeds vertex count {n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


FORMATS = {
    "graph6": (from_graph6, to_graph6),
    "dimacs": (from_dimacs, to_dimacs),
    "edges": (from_edge_list, to_edge_list),
}


def parse(text: str, fmt: str) -> Graph:
    try:
        reader, _ = FORMATS[fmt]
    except KeyError:
        raise FormatError(f"unknown format {fmt!r}") from None
    return reader(text)


def emit(g: Graph, fmt: str) -> str:
    try:
        _, writer = FORMATS[fmt]
    except KeyError:
        raise FormatError(f"unknown format {fmt!r}") from None
    return writer(g)

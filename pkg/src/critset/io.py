"""Text formats: whitespace edge lists and DIMACS ``p edge`` files."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"u v"`` lines into a graph.

    ``#`` starts a comment and blank lines are skipped.  A line holding a
    single label declares a vertex without adding an edge, which is how
    isolated vertices (and an explicit id order) are written.  Ids follow
    first appearance of each label.
    """
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) > 2:
            raise ParseError(f"expected 'label label', got {raw.strip()!r}", lineno)
        for tok in tokens:
            if tok not in index:
                index[tok] = len(index)
        if len(tokens) == 1:
            continue
        a, b = tokens
        if a == b:
            raise ParseError(f"self-loop at {a!r}", lineno)
        u, v = index[a], index[b]
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {a!r}-{b!r}", lineno)
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(edges, n=len(index), labels=list(index))


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``p edge n m`` text; vertices are labeled ``"1".."n"``."""
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge n m', got {raw.strip()!r}", lineno)
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"non-integer size in {raw.strip()!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative size", lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected 'e i j', got {raw.strip()!r}", lineno)
            try:
                i, j = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {raw.strip()!r}", lineno) from None
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"endpoint out of range 1..{n}", lineno)
            if i == j:
                raise ParseError(f"self-loop at {i}", lineno)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ParseError(f"duplicate edge {i}-{j}", lineno)
            seen.add(key)
            edges.append((i - 1, j - 1))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(edges) != declared_m:
        raise ParseError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(edges, n=n, labels=[str(i) for i in range(1, n + 1)])


def to_edge_list(G: Graph) -> str:
    """Serialize so that :func:`parse_edge_list` rebuilds the identical graph.

    Vertex declaration lines are emitted up front only when the edges alone
    would not reproduce the id order (or would drop isolated vertices).
    """
    edges = G.edges()
    order: dict[int, None] = {}
    for u, v in edges:
        order.setdefault(u)
        order.setdefault(v)
    lines = []
    if list(order) != list(range(G.n)):
        lines.extend(G.labels)
    lines.extend(f"{G.labels[u]} {G.labels[v]}" for u, v in edges)
    return "\n".join(lines) + "\n"


def to_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, fmt: str = "edge-list") -> Graph:
    text = Path(path).read_text()
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")

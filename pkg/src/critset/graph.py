"""Immutable simple graphs and the elementary set operations on them.

Vertices carry string labels externally and dense integer ids ``0..n-1``
internally.  Every set-valued result is a ``VertexSet``: a strictly
increasing tuple of ids, so results compare and serialize bit-exactly.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Raised for malformed graph data (self-loops, duplicate edges, bad ids)."""


def vertex_set(items: Iterable[int]) -> VertexSet:
    """Canonicalize ``items`` into a sorted, duplicate-free tuple."""
    return tuple(sorted(set(items)))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    Build instances with :meth:`from_edges`; the constructor trusts its input.
    """

    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    _index: dict[str, int] = field(repr=False, compare=False)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        n: int | None = None,
        labels: Sequence[str] | None = None,
    ) -> Graph:
        edges = list(edges)
        if n is None:
            n = len(labels) if labels is not None else 1 + max((max(e) for e in edges), default=-1)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise GraphError("vertex labels must be distinct")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {labels[u]!r}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {labels[u]!r}-{labels[v]!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        labels = tuple(labels)
        return cls(adj, labels, {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[tuple[str, str]]) -> Graph:
        """Build a graph whose ids follow first appearance of each label."""
        index: dict[str, int] = {}
        edges = []
        for a, b in pairs:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(index)
            edges.append((index[a], index[b]))
        return cls.from_edges(edges, n=len(index), labels=list(index))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        # adjacency tuples are short at desk scale; bisect is not worth it
        return v in a

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def ids(self, labels: Iterable[str]) -> VertexSet:
        return vertex_set(self.id_of(lab) for lab in labels)

    def label_set(self, xs: Iterable[int]) -> list[str]:
        """Labels of ``xs`` in lexicographic label order (the JSON convention)."""
        return sorted(self.labels[x] for x in xs)

    def isolated_vertices(self) -> VertexSet:
        return tuple(v for v in range(self.n) if not self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check(G: Graph, X: Iterable[int]) -> None:
    for x in X:
        if not 0 <= x < G.n:
            raise GraphError(f"vertex id {x} out of range for n={G.n}")


def neighborhood(G: Graph, X: Iterable[int]) -> VertexSet:
    """All vertices with a neighbor in ``X``; members of ``X`` may appear."""
    X = list(X)
    _check(G, X)
    out: set[int] = set()
    for u in X:
        out.update(G.adj[u])
    return vertex_set(out)


def closed_neighborhood(G: Graph, X: Iterable[int]) -> VertexSet:
    X = list(X)
    return vertex_set([*X, *neighborhood(G, X)])


def difference(G: Graph, X: Iterable[int]) -> int:
    """``|X| - |N(X)|``; negative values are normal."""
    X = set(X)
    return len(X) - len(neighborhood(G, X))


def induced_subgraph(G: Graph, X: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Return ``(G[X], old_ids)`` where ``old_ids[new_id]`` is the original id."""
    keep = vertex_set(X)
    _check(G, keep)
    new_id = {old: i for i, old in enumerate(keep)}
    adj = tuple(tuple(new_id[w] for w in G.adj[old] if w in new_id) for old in keep)
    labels = tuple(G.labels[old] for old in keep)
    return Graph(adj, labels, {lab: i for i, lab in enumerate(labels)}), keep


def delete_closed_neighborhood(G: Graph, v: int) -> tuple[Graph, VertexSet]:
    """``G - N[v]`` together with its new-id -> old-id map."""
    gone = set(G.adj[v])
    gone.add(v)
    return induced_subgraph(G, (u for u in range(G.n) if u not in gone))


def complement_set(G: Graph, X: Iterable[int]) -> VertexSet:
    X = set(X)
    return tuple(v for v in range(G.n) if v not in X)


def is_independent(G: Graph, X: Iterable[int]) -> bool:
    X = set(X)
    _check(G, X)
    return all(w not in X for u in X for w in G.adj[u])


def pendant_vertices(G: Graph) -> VertexSet:
    return tuple(v for v in range(G.n) if len(G.adj[v]) == 1)


def components(G: Graph) -> list[VertexSet]:
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(vertex_set(comp))
    return out


def is_connected(G: Graph) -> bool:
    # the empty graph counts as connected
    return G.n == 0 or len(components(G)) == 1


def bipartition(G: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Two-coloring ``(side0, side1)``, or ``None`` when an odd cycle exists."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return (
        tuple(v for v in range(G.n) if color[v] == 0),
        tuple(v for v in range(G.n) if color[v] == 1),
    )


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)

"""Maximum matching: Hopcroft-Karp for bipartite graphs, Edmonds for general ones.

Both engines are deterministic: vertices are scanned in id order and
adjacency in sorted order, so equal-size optima always come out the same.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import Graph, VertexSet, vertex_set

UNMATCHED = -1


@dataclass(frozen=True)
class BipartiteGraph:
    """Left vertices ``0..n_left-1``, right vertices ``0..n_right-1``.

    ``adj[u]`` lists the right neighbors of left vertex ``u`` (sorted, no repeats).
    """

    n_left: int
    n_right: int
    adj: Sequence[Sequence[int]]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj)


@dataclass(frozen=True)
class BipartiteMatching:
    """A maximum matching plus the alternating structure it certifies.

    ``reachable_left``/``reachable_right`` are the vertices reachable from
    exposed left vertices by alternating paths (exposed ones included).
    Since no augmenting path exists, every reachable right vertex is matched,
    and ``(left - reachable_left) | reachable_right`` is a minimum vertex cover.
    """

    mate_left: tuple[int, ...]
    mate_right: tuple[int, ...]
    reachable_left: VertexSet
    reachable_right: VertexSet

    @property
    def size(self) -> int:
        return sum(1 for w in self.mate_left if w != UNMATCHED)

    @property
    def exposed_left(self) -> VertexSet:
        return tuple(u for u, w in enumerate(self.mate_left) if w == UNMATCHED)

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, w) for u, w in enumerate(self.mate_left) if w != UNMATCHED]

    def min_vertex_cover(self) -> tuple[VertexSet, VertexSet]:
        """König cover ``(left part, right part)`` with ``size`` vertices in total."""
        reach = set(self.reachable_left)
        left = tuple(u for u in range(len(self.mate_left)) if u not in reach)
        return left, self.reachable_right


@dataclass(frozen=True)
class Matching:
    """Matching of a simple graph as a symmetric partner map (-1 = exposed)."""

    mate: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Matching:
        mate = [UNMATCHED] * n
        for u, v in pairs:
            if mate[u] != UNMATCHED or mate[v] != UNMATCHED or u == v:
                raise ValueError(f"pair ({u}, {v}) overlaps the matching")
            mate[u], mate[v] = v, u
        return cls(tuple(mate))

    @property
    def size(self) -> int:
        return sum(1 for v, w in enumerate(self.mate) if w > v)

    def pairs(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.mate) if w > v]

    def saturated(self) -> VertexSet:
        return tuple(v for v, w in enumerate(self.mate) if w != UNMATCHED)

    def is_valid(self, G: Graph) -> bool:
        if len(self.mate) != G.n:
            return False
        for v, w in enumerate(self.mate):
            if w == UNMATCHED:
                continue
            if not 0 <= w < G.n or self.mate[w] != v or not G.has_edge(v, w):
                return False
        return True


def max_bipartite_matching(H: BipartiteGraph) -> BipartiteMatching:
    """Hopcroft-Karp with a min-degree greedy warm start; O(E sqrt(V))."""
    nl, nr, adj = H.n_left, H.n_right, H.adj
    mate_l = [UNMATCHED] * nl
    mate_r = [UNMATCHED] * nr
    # warm start: low-degree left vertices first, each taking its free right
    # neighbor of least degree (ties by id)
    deg_r = [0] * nr
    for a in adj:
        for w in a:
            deg_r[w] += 1
    for u in sorted(range(nl), key=lambda u: len(adj[u])):
        best = UNMATCHED
        best_deg = nl + 1
        for w in adj[u]:
            if mate_r[w] == UNMATCHED and deg_r[w] < best_deg:
                best, best_deg = w, deg_r[w]
        if best != UNMATCHED:
            mate_l[u] = best
            mate_r[best] = u

    while True:
        # BFS layering from exposed left vertices, cut at the first layer that
        # reaches an exposed right vertex
        dist = [-1] * nl
        roots = [u for u in range(nl) if mate_l[u] == UNMATCHED]
        for u in roots:
            dist[u] = 0
        queue = list(roots)
        limit = nl + 1
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u] + 1
            if du > limit:
                break
            for w in adj[u]:
                x = mate_r[w]
                if x == UNMATCHED:
                    if limit > du:
                        limit = du
                elif dist[x] < 0:
                    dist[x] = du
                    queue.append(x)
        if limit > nl:
            break

        # layered DFS, iterative; ptr keeps each vertex's edge cursor for the phase
        ptr = [0] * nl
        for root in roots:
            if mate_l[root] != UNMATCHED:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                au = adj[u]
                if ptr[u] == len(au):
                    dist[u] = -2  # dead for the rest of the phase
                    stack.pop()
                    continue
                w = au[ptr[u]]
                ptr[u] += 1
                x = mate_r[w]
                if x == UNMATCHED:
                    for v in reversed(stack):
                        wv = adj[v][ptr[v] - 1]
                        mate_l[v] = wv
                        mate_r[wv] = v
                    for v in stack:
                        dist[v] = -2
                    break
                if dist[x] == dist[u] + 1:
                    stack.append(x)

    # the final BFS saw no augmenting path: dist >= 0 marks alternating reachability
    reach_l = tuple(u for u in range(nl) if dist[u] >= 0)
    reach_r = set()
    for u in reach_l:
        reach_r.update(adj[u])
    return BipartiteMatching(tuple(mate_l), tuple(mate_r), reach_l, vertex_set(reach_r))


def max_matching_general(G: Graph) -> Matching:
    """Edmonds' blossom algorithm (BFS with base contraction).

    A min-degree greedy matching seeds the search.  When a search from an exposed root
    fails, its whole Hungarian tree is removed from later searches; this is
    Edmonds' pruning lemma and keeps failed searches linear overall.
    """
    n, adj = G.n, G.adj
    mate = [UNMATCHED] * n
    for v in sorted(range(n), key=lambda v: len(adj[v])):
        if mate[v] != UNMATCHED:
            continue
        best = UNMATCHED
        best_deg = n
        for w in adj[v]:
            if mate[w] == UNMATCHED and len(adj[w]) < best_deg:
                best, best_deg = w, len(adj[w])
        if best != UNMATCHED:
            mate[v] = best
            mate[best] = v

    parent = [UNMATCHED] * n
    base = list(range(n))
    even = [False] * n
    dead = [False] * n

    def lca(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base[a]
            seen.add(a)
            if mate[a] == UNMATCHED:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: set[int]) -> None:
        while base[v] != b:
            blossom.add(base[v])
            blossom.add(base[mate[v]])
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    for root in range(n):
        if mate[root] != UNMATCHED or dead[root] or not adj[root]:
            continue
        tree = [root]
        even[root] = True
        queue = [root]
        head = 0
        end = UNMATCHED
        while head < len(queue) and end == UNMATCHED:
            v = queue[head]
            head += 1
            for to in adj[v]:
                if dead[to] or base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != UNMATCHED):
                    b = lca(v, to)
                    blossom: set[int] = set()
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in tree:
                        if base[i] in blossom:
                            base[i] = b
                            if not even[i]:
                                even[i] = True
                                queue.append(i)
                elif parent[to] == UNMATCHED:
                    parent[to] = v
                    tree.append(to)
                    if mate[to] == UNMATCHED:
                        end = to
                        break
                    nxt = mate[to]
                    even[nxt] = True
                    tree.append(nxt)
                    queue.append(nxt)
        if end != UNMATCHED:
            v = end
            while v != UNMATCHED:
                pv = parent[v]
                ppv = mate[pv]
                mate[v] = pv
                mate[pv] = v
                v = ppv
        else:
            for i in tree:
                dead[i] = True
        for i in tree:
            parent[i] = UNMATCHED
            base[i] = i
            even[i] = False
    return Matching(tuple(mate))


def bipartite_between(G: Graph, A: Sequence[int], B: Sequence[int]) -> BipartiteGraph:
    """Bipartite graph of the G-edges joining ``A`` (left) to ``B`` (right)."""
    pos = {b: j for j, b in enumerate(B)}
    adj = [tuple(sorted(pos[w] for w in G.adj[a] if w in pos)) for a in A]
    return BipartiteGraph(len(A), len(B), adj)


def saturating_matching(G: Graph, A: Iterable[int], B: Iterable[int]) -> Matching | None:
    """A matching of G-edges between ``A`` and ``B`` covering all of ``A``, or ``None``."""
    A, B = vertex_set(A), vertex_set(B)
    if set(A) & set(B):
        raise ValueError("A and B must be disjoint")
    if len(A) > len(B):
        return None
    M = max_bipartite_matching(bipartite_between(G, A, B))
    if M.size < len(A):
        return None
    return Matching.from_pairs(G.n, ((A[u], B[w]) for u, w in M.pairs()))


def has_matching_saturating(G: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    return saturating_matching(G, A, B) is not None

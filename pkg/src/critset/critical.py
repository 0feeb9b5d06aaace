"""Critical sets, the critical difference, and ker(G).

All polynomial quantities come from one maximum matching of the bipartite
double cover H (left copy ``v1`` and right copy ``v2`` of every vertex, with
``u1 v2`` an edge iff ``uv`` is).  For ``X`` on the left, ``N_H(X1)`` is
``N_G(X)`` on the right, so the matching deficiency ``n - mu(H)`` is the
largest ``|X| - |N(X)|``, i.e. ``d_c(G)``.  A vertex lies in every critical
set exactly when its left copy can be left exposed by a maximum matching.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import (
    Graph,
    VertexSet,
    delete_closed_neighborhood,
    difference,
    vertex_set,
)
from .matching import UNMATCHED, BipartiteGraph, BipartiteMatching, max_bipartite_matching

DEFAULT_ALPHA_C_GUARD = 1000


@dataclass(frozen=True)
class BipartiteDoubleCover:
    """H with left copies ``0..n-1`` and right copies ``0..n-1``.

    Copy ``i`` on either side stands for vertex ``i`` of the original graph,
    so the copy <-> original map is the identity on ids.
    """

    H: BipartiteGraph

    @property
    def n(self) -> int:
        return self.H.n_left

    def left_copy(self, v: int) -> int:
        return v

    def right_copy(self, v: int) -> int:
        return v

    def original(self, copy: int) -> int:
        return copy


def double_cover(G: Graph) -> BipartiteDoubleCover:
    return BipartiteDoubleCover(BipartiteGraph(G.n, G.n, G.adj))


def cover_matching(G: Graph) -> BipartiteMatching:
    """Maximum matching of the double cover, shared by the functions below."""
    return max_bipartite_matching(double_cover(G).H)


def critical_difference(G: Graph, matching: BipartiteMatching | None = None) -> int:
    M = matching or cover_matching(G)
    return G.n - M.size


def ker_fast(G: Graph, matching: BipartiteMatching | None = None) -> VertexSet:
    """Originals of left copies reachable from exposed left copies by alternating paths."""
    M = matching or cover_matching(G)
    return M.reachable_left


def ker_slow(G: Graph) -> VertexSet:
    """One matching per vertex: ``v`` is in ker iff deleting ``v1`` keeps ``mu(H)``."""
    full = max_bipartite_matching(double_cover(G).H).size
    adj = list(G.adj)
    out = []
    for v in range(G.n):
        saved, adj[v] = adj[v], ()
        if max_bipartite_matching(BipartiteGraph(G.n, G.n, adj)).size == full:
            out.append(v)
        adj[v] = saved
    return tuple(out)


def find_critical_set(G: Graph, matching: BipartiteMatching | None = None) -> VertexSet:
    """A canonical critical set: the smallest one, which is ``ker(G)``.

    Critical sets are closed under union and intersection, so the smallest
    and the largest (:func:`largest_critical_set`) are both well defined.
    """
    return ker_fast(G, matching)


def largest_critical_set(G: Graph, matching: BipartiteMatching | None = None) -> VertexSet:
    """The union of all critical sets.

    Its complement is the set of left copies reachable by alternating paths
    from exposed right copies.  The result is usually not independent.
    """
    M = matching or cover_matching(G)
    mate_l = M.mate_left
    seen_l = [False] * G.n
    seen_r = [False] * G.n
    queue = [r for r, u in enumerate(M.mate_right) if u == UNMATCHED]
    for r in queue:
        seen_r[r] = True
    head = 0
    while head < len(queue):
        r = queue[head]
        head += 1
        # in the double cover the left neighbors of right copy r are G.adj[r]
        for u in G.adj[r]:
            if not seen_l[u]:
                seen_l[u] = True
                w = mate_l[u]
                if w != UNMATCHED and not seen_r[w]:
                    seen_r[w] = True
                    queue.append(w)
    return tuple(v for v in range(G.n) if not seen_l[v])


def independent_part(G: Graph, X: Iterable[int]) -> VertexSet:
    """Members of ``X`` with no neighbor inside ``X``; never lowers ``d``."""
    X = set(X)
    return vertex_set(x for x in X if not any(w in X for w in G.adj[x]))


def critical_independence_difference(G: Graph, matching: BipartiteMatching | None = None) -> int:
    return difference(G, independent_part(G, find_critical_set(G, matching)))


def in_some_critical_independent_set(G: Graph, v: int, dc: int | None = None) -> bool:
    """``I`` critical independent with ``v`` in it <=> ``I - v`` critical in ``G - N[v]``.

    Removing ``N[v]`` drops ``deg(v)`` neighbors and one member, so the test is
    ``d_c(G - N[v]) == d_c(G) + deg(v) - 1``.
    """
    if dc is None:
        dc = critical_difference(G)
    rest, _ = delete_closed_neighborhood(G, v)
    return critical_difference(rest) == dc + G.degree(v) - 1


def max_critical_independent_set(G: Graph) -> VertexSet:
    """Greedy in id order: keep ``v`` when some critical independent set of the
    remaining graph contains it, then continue in ``G - N[v]``.

    Every critical independent set of the remaining graph extends the ones
    already chosen, so a rejected vertex never becomes eligible later, and
    the greedy result is inclusion-maximal; maximal critical independent
    sets are maximum.
    """
    M = cover_matching(G)
    candidates = set(largest_critical_set(G, M))
    current = G
    local = {v: v for v in range(G.n)}  # original id -> id in current
    dc = G.n - M.size
    chosen = []
    for v in range(G.n):
        if v not in candidates or v not in local:
            continue
        rest, keep = delete_closed_neighborhood(current, local[v])
        rest_dc = critical_difference(rest)
        if rest_dc == dc + current.degree(local[v]) - 1:
            chosen.append(v)
            back = {i: orig for orig, i in local.items()}
            local = {back[old]: new for new, old in enumerate(keep)}
            current, dc = rest, rest_dc
    return tuple(chosen)


@dataclass(frozen=True)
class QuasiRegularity:
    """``d_c == 0``, plus whether the no-isolated-vertices convention is broken."""

    quasi_regularizable: bool
    assumption_violated: bool

    def __bool__(self) -> bool:
        return self.quasi_regularizable


def is_quasi_regularizable(G: Graph, matching: BipartiteMatching | None = None) -> QuasiRegularity:
    return QuasiRegularity(
        critical_difference(G, matching) == 0,
        assumption_violated=bool(G.isolated_vertices()),
    )


@dataclass(frozen=True)
class CriticalProfile:
    dc: int
    idc: int
    ker: VertexSet
    critical_set: VertexSet
    largest_critical_set: VertexSet
    critical_independent_set: VertexSet
    max_critical_independent_set: VertexSet | None = None

    @property
    def epsilon(self) -> int:
        return len(self.ker)

    @property
    def alpha_c(self) -> int | None:
        if self.max_critical_independent_set is None:
            return None
        return len(self.max_critical_independent_set)


def critical_profile(G: Graph, alpha_c_guard: int = DEFAULT_ALPHA_C_GUARD) -> CriticalProfile:
    """Everything above from a single cover matching; ``alpha_c`` only when ``n <= alpha_c_guard``."""
    M = cover_matching(G)
    X = find_critical_set(G, M)
    witness = independent_part(G, X)
    big = largest_critical_set(G, M)
    mcis = max_critical_independent_set(G) if G.n <= alpha_c_guard else None
    return CriticalProfile(
        dc=G.n - M.size,
        idc=difference(G, witness),
        ker=ker_fast(G, M),
        critical_set=X,
        largest_critical_set=big,
        critical_independent_set=witness,
        max_critical_independent_set=mcis,
    )

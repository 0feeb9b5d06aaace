"""Exact maximum independent sets at desk scale.

Everything here is exponential in the worst case, so every entry point takes
an explicit guard.  Tripping a guard raises :class:`GuardExceeded`; nothing is
ever approximated and reported as exact.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet, induced_subgraph, is_independent, vertex_set

DEFAULT_ALPHA_GUARD = 64
DEFAULT_OMEGA_GUARD = 40
DEFAULT_NODE_BUDGET = 10**6


class GuardExceeded(RuntimeError):
    """An exact computation would exceed its size or node budget."""

    def __init__(self, message: str, bounds: tuple[int, int] | None = None):
        super().__init__(message)
        self.bounds = bounds


@dataclass(frozen=True)
class OmegaFamily:
    """All maximum independent sets, with their intersection and union."""

    alpha: int
    sets: tuple[VertexSet, ...]
    core: VertexSet
    corona: VertexSet

    @property
    def xi(self) -> int:
        return len(self.core)

    @property
    def zeta(self) -> int:
        return len(self.corona)


def _masks(G: Graph) -> list[int]:
    return [sum(1 << w for w in a) for a in G.adj]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _clique_cover_bound(P: int, nbr: list[int]) -> int:
    """Number of cliques in a greedy clique cover of ``P``: an upper bound on alpha."""
    count = 0
    while P:
        low = P & -P
        P ^= low
        cand = P & nbr[low.bit_length() - 1]
        while cand:
            low = cand & -cand
            P ^= low
            cand &= nbr[low.bit_length() - 1]
        count += 1
    return count


def _pick_branch_vertex(P: int, nbr: list[int]) -> int:
    best, best_deg = -1, -1
    for v in _bits(P):
        d = (nbr[v] & P).bit_count()
        if d > best_deg:
            best, best_deg = v, d
    return best


class _Search:
    def __init__(self, nbr: list[int], node_budget: int):
        self.nbr = nbr
        self.node_budget = node_budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise GuardExceeded(f"search exceeded {self.node_budget} nodes")

    def alpha(self, P: int) -> int:
        best = 0

        def go(P: int, size: int) -> None:
            nonlocal best
            self.tick()
            nbr = self.nbr
            # vertices of degree <= 1 inside P always belong to some optimum
            changed = True
            while changed and P:
                changed = False
                for v in _bits(P):
                    if not P >> v & 1:
                        continue
                    if (nbr[v] & P).bit_count() <= 1:
                        P &= ~(nbr[v] | 1 << v)
                        size += 1
                        changed = True
            if not P:
                best = max(best, size)
                return
            if size + _clique_cover_bound(P, nbr) <= best:
                return
            v = _pick_branch_vertex(P, nbr)
            go(P & ~(nbr[v] | 1 << v), size + 1)
            go(P & ~(1 << v), size)

        go(P, 0)
        return best

    def all_of_size(self, P: int, target: int) -> list[int]:
        found: list[int] = []

        def go(P: int, chosen: int, size: int) -> None:
            self.tick()
            nbr = self.nbr
            if size + P.bit_count() < target:
                return
            # a maximum set is maximal, so it takes every vertex isolated in P
            lonely = 0
            for v in _bits(P):
                if not nbr[v] & P:
                    lonely |= 1 << v
            if lonely:
                P &= ~lonely
                chosen |= lonely
                size += lonely.bit_count()
            if not P:
                if size == target:
                    found.append(chosen)
                return
            if size + _clique_cover_bound(P, nbr) < target:
                return
            v = _pick_branch_vertex(P, nbr)
            go(P & ~(nbr[v] | 1 << v), chosen | 1 << v, size + 1)
            go(P & ~(1 << v), chosen, size)

        go(P, 0, 0)
        return found


def greedy_independent_set(G: Graph) -> VertexSet:
    """Min-degree greedy independent set; a lower bound on alpha."""
    alive = [True] * G.n
    chosen = []
    for v in sorted(range(G.n), key=G.degree):
        if alive[v]:
            chosen.append(v)
            alive[v] = False
            for w in G.adj[v]:
                alive[w] = False
    return vertex_set(chosen)


def alpha_bounds(G: Graph, mu: int | None = None, dc: int | None = None) -> tuple[int, int]:
    """``(greedy lower, upper)`` with upper from ``n - mu`` and ``(n + d_c) // 2``."""
    lower = len(greedy_independent_set(G))
    upper = G.n
    if mu is not None:
        upper = min(upper, G.n - mu)
    if dc is not None:
        # any maximum S has d(S) >= 2|S| - n, and d(S) <= d_c
        upper = min(upper, (G.n + dc) // 2)
    return lower, upper


def exact_alpha(
    G: Graph, guard: int = DEFAULT_ALPHA_GUARD, node_budget: int = DEFAULT_NODE_BUDGET
) -> int:
    """Independence number by branch and bound.

    Raises :class:`GuardExceeded` (carrying greedy/matching bounds) when
    ``n > guard`` or the search tree outgrows ``node_budget``.
    """
    if G.n > guard:
        raise GuardExceeded(f"n={G.n} exceeds alpha guard {guard}", _bounds(G))
    try:
        return _Search(_masks(G), node_budget).alpha((1 << G.n) - 1)
    except GuardExceeded as exc:
        raise GuardExceeded(str(exc), _bounds(G)) from None


def _bounds(G: Graph) -> tuple[int, int]:
    from .matching import max_matching_general

    return alpha_bounds(G, mu=max_matching_general(G).size)


def enumerate_maximum_independent_sets(
    G: Graph,
    guard: int = DEFAULT_OMEGA_GUARD,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> OmegaFamily:
    """The complete family of maximum independent sets (two passes)."""
    if G.n > guard:
        raise GuardExceeded(f"n={G.n} exceeds enumeration guard {guard}")
    nbr = _masks(G)
    search = _Search(nbr, node_budget)
    full = (1 << G.n) - 1
    alpha = search.alpha(full)
    found = search.all_of_size(full, alpha)
    sets = sorted(tuple(_bits(m)) for m in found)
    core = full
    corona = 0
    for m in found:
        core &= m
        corona |= m
    return OmegaFamily(alpha, tuple(sets), tuple(_bits(core)), tuple(_bits(corona)))


def is_local_max_independent_set(
    G: Graph, A: Iterable[int], guard: int = DEFAULT_ALPHA_GUARD
) -> bool:
    """True iff ``A`` is a maximum independent set of ``G[N[A]]``."""
    A = vertex_set(A)
    if not is_independent(G, A):
        raise GraphError("local maximality is defined for independent sets only")
    closed = set(A)
    for a in A:
        closed.update(G.adj[a])
    sub, _ = induced_subgraph(G, closed)
    return exact_alpha(sub, guard) == len(A)

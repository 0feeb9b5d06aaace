"""Brute-force reference values, straight from the definitions.

Subsets are swept in plain ascending bitmask order.  Nothing here shares code
with the polynomial algorithms beyond the ``Graph`` container, so agreement
between the two is meaningful.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from .graph import Graph, VertexSet
from .mis import OmegaFamily

log = logging.getLogger(__name__)

HARD_SUBSET_CAP = 20


class BudgetExceeded(RuntimeError):
    pass


class OracleInconsistency(AssertionError):
    """Two definitional routes to the same quantity disagreed."""


@dataclass(frozen=True)
class OracleBudget:
    max_subset_vertices: int = 16
    max_matching_vertices: int = 14

    def __post_init__(self) -> None:
        if self.max_subset_vertices > HARD_SUBSET_CAP:
            raise ValueError(f"subset budget is capped at {HARD_SUBSET_CAP} vertices")
        if self.max_subset_vertices > 16 or self.max_matching_vertices > 14:
            log.warning("oracle budget raised above defaults; runs may be slow")


def _bits(mask: int) -> VertexSet:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


class Oracle:
    """Lazily computed exhaustive tables for one graph."""

    def __init__(self, G: Graph, budget: OracleBudget | None = None):
        self.G = G
        self.budget = budget or OracleBudget()
        self.nbr = [sum(1 << w for w in a) for a in G.adj]

    def _need_subsets(self) -> None:
        if self.G.n > self.budget.max_subset_vertices:
            raise BudgetExceeded(
                f"n={self.G.n} exceeds oracle subset budget {self.budget.max_subset_vertices}"
            )

    @cached_property
    def _tables(self) -> tuple[list[int], list[bool]]:
        """Per-mask difference ``d(X)`` and independence flag."""
        self._need_subsets()
        n, nbr = self.G.n, self.nbr
        size = 1 << n
        N = [0] * size
        diff = [0] * size
        indep = [True] * size
        for m in range(1, size):
            low = m & -m
            i = low.bit_length() - 1
            rest = m ^ low
            N[m] = N[rest] | nbr[i]
            diff[m] = m.bit_count() - N[m].bit_count()
            indep[m] = indep[rest] and not (nbr[i] & rest)
        return diff, indep

    @cached_property
    def dc(self) -> int:
        return max(self._tables[0])

    @cached_property
    def idc(self) -> int:
        diff, indep = self._tables
        return max(d for d, ok in zip(diff, indep) if ok)

    @cached_property
    def critical_masks(self) -> list[int]:
        diff, _ = self._tables
        dc = self.dc
        return [m for m, d in enumerate(diff) if d == dc]

    @cached_property
    def critical_independent_masks(self) -> list[int]:
        _, indep = self._tables
        return [m for m in self.critical_masks if indep[m]]

    def all_critical_sets(self) -> list[VertexSet]:
        return [_bits(m) for m in self.critical_masks]

    def all_critical_independent_sets(self) -> list[VertexSet]:
        return [_bits(m) for m in self.critical_independent_masks]

    @cached_property
    def ker(self) -> VertexSet:
        full = (1 << self.G.n) - 1
        via_independent = full
        for m in self.critical_independent_masks:
            via_independent &= m
        via_all = full
        for m in self.critical_masks:
            via_all &= m
        if via_independent != via_all:
            raise OracleInconsistency(
                f"ker over critical independent sets {_bits(via_independent)} "
                f"!= over all critical sets {_bits(via_all)}"
            )
        return _bits(via_all)

    @cached_property
    def omega(self) -> OmegaFamily:
        _, indep = self._tables
        alpha = max(m.bit_count() for m, ok in enumerate(indep) if ok)
        found = [m for m, ok in enumerate(indep) if ok and m.bit_count() == alpha]
        core, corona = (1 << self.G.n) - 1, 0
        for m in found:
            core &= m
            corona |= m
        sets = tuple(sorted(_bits(m) for m in found))
        return OmegaFamily(alpha, sets, _bits(core), _bits(corona))

    @property
    def alpha(self) -> int:
        return self.omega.alpha

    @cached_property
    def mu(self) -> int:
        """Maximum matching by exhaustive branching on the lowest free vertex."""
        if self.G.n > self.budget.max_matching_vertices:
            raise BudgetExceeded(
                f"n={self.G.n} exceeds oracle matching budget "
                f"{self.budget.max_matching_vertices}"
            )
        nbr = self.nbr
        memo: dict[int, int] = {0: 0}

        def best(mask: int) -> int:
            if mask in memo:
                return memo[mask]
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            value = best(rest)  # v stays unmatched
            cand = nbr[v] & rest
            while cand:
                w = cand & -cand
                cand ^= w
                value = max(value, 1 + best(rest ^ w))
            memo[mask] = value
            return value

        return best((1 << self.G.n) - 1)

    @cached_property
    def quasi_regularizable(self) -> bool:
        diff, indep = self._tables
        return all(d <= 0 for d, ok in zip(diff, indep) if ok)

    @cached_property
    def max_critical_independent_masks(self) -> list[int]:
        masks = self.critical_independent_masks
        top = max(m.bit_count() for m in masks)
        return [m for m in masks if m.bit_count() == top]

    def max_critical_independent_sets(self) -> list[VertexSet]:
        return [_bits(m) for m in self.max_critical_independent_masks]

    @property
    def alpha_c(self) -> int:
        return self.max_critical_independent_masks[0].bit_count()

    def independent_masks(self) -> list[int]:
        _, indep = self._tables
        return [m for m, ok in enumerate(indep) if ok]

    def difference(self, mask: int) -> int:
        return self._tables[0][mask]


def oracle_dc(G: Graph, budget: OracleBudget | None = None) -> int:
    return Oracle(G, budget).dc


def oracle_all_critical_sets(G: Graph, budget: OracleBudget | None = None) -> list[VertexSet]:
    return Oracle(G, budget).all_critical_sets()


def oracle_ker(G: Graph, budget: OracleBudget | None = None) -> VertexSet:
    return Oracle(G, budget).ker


def oracle_omega(G: Graph, budget: OracleBudget | None = None) -> OmegaFamily:
    return Oracle(G, budget).omega


def oracle_alpha(G: Graph, budget: OracleBudget | None = None) -> int:
    return Oracle(G, budget).alpha


def oracle_mu(G: Graph, budget: OracleBudget | None = None) -> int:
    return Oracle(G, budget).mu


def oracle_quasi_regularizable(G: Graph, budget: OracleBudget | None = None) -> bool:
    return Oracle(G, budget).quasi_regularizable


def oracle_max_critical_independent_sets(
    G: Graph, budget: OracleBudget | None = None
) -> list[VertexSet]:
    return Oracle(G, budget).max_critical_independent_sets()

"""Single-graph analysis: every invariant we can get, exact or marked unavailable."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .critical import (
    DEFAULT_ALPHA_C_GUARD,
    cover_matching,
    find_critical_set,
    independent_part,
    ker_fast,
    ker_slow,
    max_critical_independent_set,
)
from .graph import Graph, VertexSet, difference
from .matching import max_matching_general
from .mis import (
    DEFAULT_ALPHA_GUARD,
    DEFAULT_NODE_BUDGET,
    DEFAULT_OMEGA_GUARD,
    GuardExceeded,
    OmegaFamily,
    alpha_bounds,
    enumerate_maximum_independent_sets,
    exact_alpha,
)
from .oracle import BudgetExceeded, Oracle

SCHEMA_VERSION = 1
UNAVAILABLE = "unavailable"
DEFAULT_MATCHING_GUARD = 10_000


class InvariantBreach(RuntimeError):
    """Two independent routes to the same value disagreed."""


@dataclass(frozen=True)
class AnalysisReport:
    graph: Graph
    mu: int | None
    dc: int
    idc: int
    ker: VertexSet
    critical_independent_set: VertexSet
    alpha: int | None
    alpha_bounds: tuple[int, int]
    omega: OmegaFamily | None
    max_critical_independent_set: VertexSet | None
    oracle: dict[str, Any] | None = None
    cross_checked: bool = False

    @property
    def epsilon(self) -> int:
        return len(self.ker)

    @property
    def koenig_egervary(self) -> bool | None:
        if self.alpha is None or self.mu is None:
            return None
        return self.alpha + self.mu == self.graph.n

    def to_dict(self) -> dict[str, Any]:
        G = self.graph
        labels = G.label_set
        om = self.omega
        alpha: Any = self.alpha
        if alpha is None:
            alpha = {"lower": self.alpha_bounds[0], "upper": self.alpha_bounds[1]}
        out: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "n": G.n,
            "m": G.m,
            "has_isolated_vertices": bool(G.isolated_vertices()),
            "isolated_vertices": labels(G.isolated_vertices()),
            "alpha": alpha,
            "mu": UNAVAILABLE if self.mu is None else self.mu,
            "dc": self.dc,
            "idc": self.idc,
            "ker": labels(self.ker),
            "epsilon": self.epsilon,
            "core": UNAVAILABLE if om is None else labels(om.core),
            "xi": UNAVAILABLE if om is None else om.xi,
            "corona": UNAVAILABLE if om is None else labels(om.corona),
            "zeta": UNAVAILABLE if om is None else om.zeta,
            "koenig_egervary": (UNAVAILABLE if self.koenig_egervary is None
                                else self.koenig_egervary),
            "quasi_regularizable": self.dc == 0,
            "critical_independent_set": labels(self.critical_independent_set),
            "alpha_c": (UNAVAILABLE if self.max_critical_independent_set is None
                        else len(self.max_critical_independent_set)),
            "max_critical_independent_set": (
                UNAVAILABLE if self.max_critical_independent_set is None
                else labels(self.max_critical_independent_set)
            ),
            "ker_cross_checked": self.cross_checked,
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out


def analyze(
    G: Graph,
    *,
    alpha_guard: int = DEFAULT_ALPHA_GUARD,
    omega_guard: int = DEFAULT_OMEGA_GUARD,
    node_budget: int = DEFAULT_NODE_BUDGET,
    matching_guard: int = DEFAULT_MATCHING_GUARD,
    alpha_c_guard: int = DEFAULT_ALPHA_C_GUARD,
    mis: bool = True,
    cross_check: bool = False,
    oracle: bool = False,
) -> AnalysisReport:
    """Compute the report; ``mis=False`` keeps to the polynomial path.

    Raises :class:`InvariantBreach` when ``cross_check`` or ``oracle`` finds a
    disagreement.
    """
    M = cover_matching(G)
    dc = G.n - M.size
    ker = ker_fast(G, M)
    witness = independent_part(G, find_critical_set(G, M))
    if cross_check and ker_slow(G) != ker:
        raise InvariantBreach(f"ker_fast {G.label_set(ker)} != ker_slow {G.label_set(ker_slow(G))}")

    mu = max_matching_general(G).size if G.n <= matching_guard else None
    alpha = None
    omega = None
    if mis:
        try:
            alpha = exact_alpha(G, alpha_guard, node_budget)
        except GuardExceeded:
            pass
        try:
            omega = enumerate_maximum_independent_sets(G, omega_guard, node_budget)
        except GuardExceeded:
            pass
    bounds = (alpha, alpha) if alpha is not None else alpha_bounds(G, mu, dc)
    mcis = max_critical_independent_set(G) if G.n <= alpha_c_guard else None

    oracle_values = None
    if oracle:
        oracle_values = _oracle_comparison(G, dc, ker, mu, alpha, omega, mcis)

    return AnalysisReport(
        graph=G,
        mu=mu,
        dc=dc,
        idc=difference(G, witness),
        ker=ker,
        critical_independent_set=witness,
        alpha=alpha,
        alpha_bounds=bounds,
        omega=omega,
        max_critical_independent_set=mcis,
        oracle=oracle_values,
        cross_checked=cross_check,
    )


def _oracle_comparison(G, dc, ker, mu, alpha, omega, mcis) -> dict[str, Any]:
    brute = Oracle(G)
    try:
        values: dict[str, Any] = {"dc": brute.dc, "ker": G.label_set(brute.ker),
                                  "alpha": brute.alpha, "alpha_c": brute.alpha_c}
        if G.n <= brute.budget.max_matching_vertices:
            values["mu"] = brute.mu
    except BudgetExceeded as exc:
        return {"status": f"skipped: {exc}"}
    mismatches = []
    if brute.dc != dc:
        mismatches.append("dc")
    if brute.ker != ker:
        mismatches.append("ker")
    if alpha is not None and brute.alpha != alpha:
        mismatches.append("alpha")
    if omega is not None and brute.omega != omega:
        mismatches.append("omega")
    if mcis is not None and brute.alpha_c != len(mcis):
        mismatches.append("alpha_c")
    if "mu" in values and mu is not None and values["mu"] != mu:
        mismatches.append("mu")
    if mismatches:
        raise InvariantBreach(f"oracle disagrees on {', '.join(mismatches)}")
    values["status"] = "agrees"
    return values


def render_text(report: AnalysisReport) -> str:
    d = report.to_dict()

    def fmt(v: Any) -> str:
        if isinstance(v, list):
            return "{" + ", ".join(v) + "}"
        if isinstance(v, dict):
            return f"[{v['lower']}, {v['upper']}]"
        return str(v)

    lines = [
        f"n = {d['n']}, m = {d['m']}"
        + (f"  (isolated vertices: {fmt(d['isolated_vertices'])})" if d["has_isolated_vertices"] else ""),
        f"alpha = {fmt(d['alpha'])}, mu = {d['mu']}, Koenig-Egervary: {d['koenig_egervary']}",
        f"d_c = {d['dc']}, id_c = {d['idc']}, quasi-regularizable: {d['quasi_regularizable']}",
        f"ker = {fmt(d['ker'])}  (epsilon = {d['epsilon']})",
        f"core = {fmt(d['core'])}  (xi = {d['xi']})",
        f"corona = {fmt(d['corona'])}  (zeta = {d['zeta']})",
        f"critical independent set = {fmt(d['critical_independent_set'])}",
        f"alpha_c = {d['alpha_c']}, maximum critical independent set = "
        f"{fmt(d['max_critical_independent_set'])}",
    ]
    alpha = d["alpha"]
    if isinstance(alpha, int) and isinstance(d["mu"], int) and isinstance(d["xi"], int):
        lines.append(
            "n >= zeta >= alpha >= xi >= epsilon >= d_c >= alpha-mu:  "
            f"{d['n']} >= {d['zeta']} >= {alpha} >= {d['xi']} >= {d['epsilon']} "
            f">= {d['dc']} >= {alpha - d['mu']}"
        )
    if "oracle" in d:
        lines.append(f"oracle: {d['oracle'].get('status')}")
    return "\n".join(lines) + "\n"

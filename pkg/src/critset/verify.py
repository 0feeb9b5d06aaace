"""Machine-checkable statements about critical sets, ker, core and matchings.

Each check gates itself on its hypotheses and reports ``pass``, ``fail`` or
``skipped``.  Skips say why: the hypothesis is false for this graph, a
guard or budget tripped, or the no-isolated-vertices convention is broken.
A failure always carries the concrete sets and numbers that refute the
statement.  Check ids ``C1``..``C17`` are stable.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Any

from .critical import (
    cover_matching,
    independent_part,
    largest_critical_set,
    ker_fast,
    max_critical_independent_set,
)
from .generate import Lcg64
from .graph import (
    Graph,
    VertexSet,
    complement_set,
    difference,
    induced_subgraph,
    is_connected,
    is_bipartite,
    is_independent,
    is_tree,
    neighborhood,
    pendant_vertices,
    vertex_set,
)
from .matching import UNMATCHED, max_matching_general, saturating_matching
from .mis import (
    DEFAULT_ALPHA_GUARD,
    DEFAULT_NODE_BUDGET,
    DEFAULT_OMEGA_GUARD,
    GuardExceeded,
    OmegaFamily,
    enumerate_maximum_independent_sets,
    exact_alpha,
    is_local_max_independent_set,
)
from .oracle import BudgetExceeded, Oracle, OracleBudget, OracleInconsistency

CHECK_IDS = tuple(f"C{i}" for i in range(1, 18))

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

HYPOTHESIS_FALSE = "hypothesis false"
GUARD_EXCEEDED = "guard exceeded"
ASSUMPTION_VIOLATED = "assumption violated"
INTERNAL_ERROR = "internal error"

MAX_LATTICE_SETS = 2000
LATTICE_SAMPLE_PAIRS = 200_000


@dataclass(frozen=True)
class VerifyConfig:
    checks: tuple[str, ...] = CHECK_IDS
    oracle_limit: int = 16
    matching_oracle_limit: int = 14
    desk_limit: int = 12
    alpha_guard: int = DEFAULT_ALPHA_GUARD
    omega_guard: int = DEFAULT_OMEGA_GUARD
    node_budget: int = DEFAULT_NODE_BUDGET
    supermodular_pairs: int = 200
    seed: int = 0

    def __post_init__(self) -> None:
        unknown = [c for c in self.checks if c not in CHECK_IDS]
        if unknown:
            raise ValueError(f"unknown check ids: {', '.join(unknown)}")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    outcome: str
    witness: dict[str, Any] = field(default_factory=dict)
    reason: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.check_id, "outcome": self.outcome, "reason": self.reason,
                "witness": self.witness}


@dataclass(frozen=True)
class VerificationReport:
    graph: dict[str, Any]
    config: VerifyConfig
    results: tuple[CheckResult, ...]

    def by_id(self) -> dict[str, CheckResult]:
        return {r.check_id: r for r in self.results}

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if r.outcome == FAIL]

    @property
    def internal_errors(self) -> list[CheckResult]:
        return [r for r in self.results if (r.reason or "").startswith(INTERNAL_ERROR)]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict[str, Any]:
        cfg = asdict(self.config)
        cfg["checks"] = list(self.config.checks)
        return {
            "graph": self.graph,
            "budgets": {k: v for k, v in cfg.items() if k not in ("checks", "seed")},
            "seed": self.config.seed,
            "checks": [r.to_dict() for r in self.results],
        }


class Skip(Exception):
    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind


class _Facts:
    """Per-graph cache shared by the checks of one run."""

    def __init__(self, G: Graph, config: VerifyConfig):
        self.G = G
        self.config = config

    def labels(self, xs) -> list[str]:
        return self.G.label_set(xs)

    @cached_property
    def isolated(self) -> VertexSet:
        return self.G.isolated_vertices()

    def require_no_isolated(self) -> None:
        if self.isolated:
            raise Skip(ASSUMPTION_VIOLATED, f"isolated vertices {self.labels(self.isolated)}")

    @cached_property
    def cover(self):
        return cover_matching(self.G)

    @cached_property
    def dc(self) -> int:
        return self.G.n - self.cover.size

    @cached_property
    def ker(self) -> VertexSet:
        return ker_fast(self.G, self.cover)

    @cached_property
    def critical_set(self) -> VertexSet:
        return largest_critical_set(self.G, self.cover)

    @cached_property
    def witness_set(self) -> VertexSet:
        return independent_part(self.G, self.critical_set)

    @cached_property
    def mcis(self) -> VertexSet:
        return max_critical_independent_set(self.G)

    @cached_property
    def mu(self) -> int:
        return max_matching_general(self.G).size

    @cached_property
    def omega(self) -> OmegaFamily:
        try:
            return enumerate_maximum_independent_sets(
                self.G, self.config.omega_guard, self.config.node_budget
            )
        except GuardExceeded as exc:
            raise Skip(GUARD_EXCEEDED, f"maximum independent sets unavailable ({exc})") from None

    @property
    def alpha(self) -> int:
        return self.omega.alpha

    @cached_property
    def oracle(self) -> Oracle:
        if self.G.n > self.config.oracle_limit:
            raise Skip(GUARD_EXCEEDED, f"n={self.G.n} above oracle limit {self.config.oracle_limit}")
        return Oracle(
            self.G,
            OracleBudget(self.config.oracle_limit, self.config.matching_oracle_limit),
        )

    @cached_property
    def family(self) -> list[VertexSet]:
        """Critical independent sets to instantiate universally quantified checks."""
        sets = [self.ker, self.witness_set, self.mcis]
        if self.G.n <= min(self.config.desk_limit, self.config.oracle_limit):
            sets.extend(self.oracle.all_critical_independent_sets())
        return list(dict.fromkeys(sets))

    def alpha_of(self, H: Graph) -> int:
        try:
            return exact_alpha(H, self.config.alpha_guard, self.config.node_budget)
        except GuardExceeded as exc:
            raise Skip(GUARD_EXCEEDED, str(exc)) from None

    def omega_of(self, H: Graph) -> OmegaFamily:
        try:
            return enumerate_maximum_independent_sets(
                H, self.config.omega_guard, self.config.node_budget
            )
        except GuardExceeded as exc:
            raise Skip(GUARD_EXCEEDED, str(exc)) from None

    def split(self, A: VertexSet) -> tuple[VertexSet, VertexSet]:
        """``X = A | N(A)`` and ``V - X``."""
        X = vertex_set([*A, *neighborhood(self.G, A)])
        return X, complement_set(self.G, X)


Verdict = tuple[bool, dict[str, Any]]


def _c1_quasi_regularizable(f: _Facts) -> Verdict:
    f.require_no_isolated()
    fast = f.dc == 0
    brute = f.oracle.quasi_regularizable
    return fast == brute, {"d_c": f.dc, "fast": fast, "oracle": brute}


def _c2_berge(f: _Facts) -> Verdict:
    G = f.G
    if G.n > f.config.desk_limit:
        raise Skip(GUARD_EXCEEDED, f"n={G.n} above desk limit {f.config.desk_limit}")
    nbr = f.oracle.nbr
    independent = f.oracle.independent_masks()
    checked = 0
    for S in f.omega.sets:
        smask = sum(1 << s for s in S)
        free = [u for u in range(G.n) if not smask >> u & 1]
        for m in independent:
            if m & smask:
                continue
            # subsets of a matchable set are matchable: test only maximal ones
            if any(not m >> u & 1 and not nbr[u] & m for u in free):
                continue
            A = tuple(u for u in free if m >> u & 1)
            checked += 1
            if saturating_matching(G, A, S) is None:
                return False, {"S": f.labels(S), "A": f.labels(A)}
    return True, {"maximum_sets": len(f.omega.sets), "maximal_A_checked": checked}


def _c3_ke_matching(f: _Facts) -> Verdict:
    checked = 0
    for A in f.family:
        X, _ = f.split(A)
        GX, old = induced_subgraph(f.G, X)
        om = f.omega_of(GX)
        M = max_matching_general(GX)
        if om.alpha + M.size != GX.n:
            continue  # not Koenig-Egervary here; C6 reports that
        for S in om.sets:
            inside = set(S)
            rest = [v for v in range(GX.n) if v not in inside]
            bad = [v for v in rest if M.mate[v] == UNMATCHED or M.mate[v] not in inside]
            if bad or M.size != len(rest):
                return False, {
                    "A": f.labels(A),
                    "X": f.labels(X),
                    "S": f.labels(old[s] for s in S),
                    "mu": M.size,
                    "not_matched_into_S": f.labels(old[v] for v in bad),
                }
            checked += 1
    if not checked:
        raise Skip(HYPOTHESIS_FALSE, "no A with G[A | N(A)] Koenig-Egervary")
    return True, {"critical_independent_sets": len(f.family), "pairs_checked": checked}


def _c4_dc_equals_idc(f: _Facts) -> Verdict:
    I = f.witness_set
    idc = difference(f.G, I)
    w: dict[str, Any] = {"d_c": f.dc, "id_c": idc, "independent_set": f.labels(I)}
    ok = idc == f.dc and is_independent(f.G, I)
    if f.G.n <= f.config.oracle_limit:
        w["d_c_oracle"] = f.oracle.dc
        w["id_c_oracle"] = f.oracle.idc
        ok = ok and f.oracle.dc == f.oracle.idc == f.dc
    return ok, w


def _c5_critical_chain(f: _Facts) -> Verdict:
    G = f.G
    for A in f.family:
        try:
            local = is_local_max_independent_set(G, A, f.config.alpha_guard)
        except GuardExceeded as exc:
            raise Skip(GUARD_EXCEEDED, str(exc)) from None
        inside = any(set(A) <= set(S) for S in f.omega.sets)
        NA = neighborhood(G, A)
        matchable = saturating_matching(G, NA, A) is not None
        if not (local and inside and matchable):
            return False, {
                "A": f.labels(A),
                "local_maximum": local,
                "inside_maximum_independent_set": inside,
                "N(A)_matchable_into_A": matchable,
            }
    return True, {"critical_independent_sets": len(f.family)}


def _c6_decomposition(f: _Facts) -> Verdict:
    G = f.G
    for A in f.family:
        X, rest = f.split(A)
        GX, _ = induced_subgraph(G, X)
        GR, _ = induced_subgraph(G, rest)
        a_x, a_r = f.alpha_of(GX), f.alpha_of(GR)
        m_x, m_r = max_matching_general(GX).size, max_matching_general(GR).size
        ke = a_x + m_x == len(X)
        small_rest = a_r <= m_r
        additive = m_x + m_r == f.mu
        if not (ke and small_rest and additive):
            return False, {
                "A": f.labels(A),
                "X": f.labels(X),
                "alpha_X": a_x,
                "mu_X": m_x,
                "alpha_rest": a_r,
                "mu_rest": m_r,
                "mu": f.mu,
            }
    return True, {"critical_independent_sets": len(f.family)}


def _c7_lorentzen(f: _Facts) -> Verdict:
    alpha = f.alpha_of(f.G)
    return f.dc >= alpha - f.mu, {"d_c": f.dc, "alpha": alpha, "mu": f.mu}


def _c8_larson(f: _Facts) -> Verdict:
    G = f.G
    J = f.mcis
    X, rest = f.split(J)
    GX, _ = induced_subgraph(G, X)
    GR, _ = induced_subgraph(G, rest)
    alpha = f.alpha_of(G)
    a_x, a_r = f.alpha_of(GX), f.alpha_of(GR)
    m_x = max_matching_general(GX).size
    w: dict[str, Any] = {
        "J": f.labels(J),
        "alpha": alpha,
        "alpha_c": len(J),
        "alpha_X": a_x,
        "alpha_rest": a_r,
        "mu_X": m_x,
        "size_X": len(X),
    }
    ok = alpha == a_x + a_r == len(J) + a_r and a_x + m_x == len(X)
    if G.n <= f.config.oracle_limit:
        w["alpha_c_oracle"] = f.oracle.alpha_c
        ok = ok and f.oracle.alpha_c == len(J)
    return ok, w


def _c9_supermodular(f: _Facts) -> Verdict:
    oracle = f.oracle
    G = f.G
    full = (1 << G.n) - 1
    rng = Lcg64(f.config.seed)
    d = oracle.difference
    for _ in range(f.config.supermodular_pairs):
        a, b = rng.next_u64() & full, rng.next_u64() & full
        if d(a | b) + d(a & b) < d(a) + d(b):
            bits = lambda m: f.labels(i for i in range(G.n) if m >> i & 1)  # noqa: E731
            return False, {"A": bits(a), "B": bits(b), "d(A|B)": d(a | b),
                           "d(A&B)": d(a & b), "d(A)": d(a), "d(B)": d(b)}
    crit = oracle.critical_masks
    members = set(crit)
    if len(crit) <= MAX_LATTICE_SETS:
        pairs = ((a, b) for i, a in enumerate(crit) for b in crit[i + 1:])
        lattice = "all pairs"
    else:
        pairs = ((crit[rng.randbelow(len(crit))], crit[rng.randbelow(len(crit))])
                 for _ in range(LATTICE_SAMPLE_PAIRS))
        lattice = f"{LATTICE_SAMPLE_PAIRS} sampled pairs"
    for a, b in pairs:
        if a | b not in members or a & b not in members:
            bits = lambda m: f.labels(i for i in range(G.n) if m >> i & 1)  # noqa: E731
            return False, {"A": bits(a), "B": bits(b), "reason": "union or intersection not critical"}
    try:
        brute_ker = oracle.ker
    except OracleInconsistency as exc:
        return False, {"ker": str(exc)}
    ok = brute_ker == f.ker
    return ok, {
        "pairs_sampled": f.config.supermodular_pairs,
        "critical_sets": len(crit),
        "lattice_checked": lattice,
        "ker": f.labels(f.ker),
        "ker_oracle": f.labels(brute_ker),
    }


def _chain_numbers(f: _Facts) -> dict[str, int]:
    om = f.omega
    return {
        "n": f.G.n,
        "zeta": om.zeta,
        "alpha": om.alpha,
        "xi": om.xi,
        "epsilon": len(f.ker),
        "d_c": f.dc,
        "alpha-mu": om.alpha - f.mu,
    }


def _c10_chain(f: _Facts) -> Verdict:
    w = _chain_numbers(f)
    n, zeta, alpha, xi, eps, dc, gap = w.values()
    ok = n >= zeta >= alpha >= xi >= eps >= dc >= gap and xi >= gap + eps - dc
    return ok, w


def _c11_strict_chain(f: _Facts) -> Verdict:
    f.require_no_isolated()
    if f.dc == 0:
        raise Skip(HYPOTHESIS_FALSE, "d_c = 0 (quasi-regularizable)")
    w: dict[str, Any] = _chain_numbers(f)
    xi, eps, dc, gap = w["xi"], w["epsilon"], w["d_c"], w["alpha-mu"]
    claims = {
        "epsilon > d_c": eps > dc,
        "d_c >= alpha-mu": dc >= gap,
        "alpha-mu >= 1": gap >= 1,
        "xi > alpha-mu+epsilon-d_c": xi > gap + eps - dc,
    }
    w["violated"] = [c for c, ok in claims.items() if not ok]
    return not w["violated"], w


def _c12_core_exceeds_dc(f: _Facts) -> Verdict:
    f.require_no_isolated()
    if f.dc == 0:
        raise Skip(HYPOTHESIS_FALSE, "no independent S with |S| > |N(S)|")
    xi = f.omega.xi
    return xi > f.dc, {"xi": xi, "d_c": f.dc}


def _c13_core_not_one(f: _Facts) -> Verdict:
    G = f.G
    tree = is_tree(G)
    connected_bipartite = is_connected(G) and is_bipartite(G)
    if G.n < 2 or not (tree or connected_bipartite):
        raise Skip(HYPOTHESIS_FALSE, "not a tree or connected bipartite graph with n >= 2")
    xi = f.omega.xi
    return xi != 1, {"tree": tree, "connected_bipartite": connected_bipartite, "xi": xi}


def _c14_pendants(f: _Facts) -> Verdict:
    pend = set(pendant_vertices(f.G))
    if not pend:
        raise Skip(HYPOTHESIS_FALSE, "no pendant vertices")
    sets = f.oracle.max_critical_independent_sets()
    for J in sets:
        missing = pend - set(J)
        if missing:
            return False, {"pendant": f.labels(pend), "J": f.labels(J), "missing": f.labels(missing)}
    return True, {"pendant": f.labels(pend), "maximum_critical_independent_sets": len(sets)}


def _c15_core_exceeds_gap(f: _Facts) -> Verdict:
    G = f.G
    if G.n < 2 or not is_connected(G):
        raise Skip(HYPOTHESIS_FALSE, "not connected with n >= 2")
    alpha = f.alpha
    if alpha <= f.mu:
        raise Skip(HYPOTHESIS_FALSE, "alpha <= mu")
    xi = f.omega.xi
    return xi > alpha - f.mu, {"xi": xi, "alpha": alpha, "mu": f.mu}


def _c16_hammer_bound(f: _Facts) -> Verdict:
    f.require_no_isolated()
    n, alpha = f.G.n, f.alpha
    ks = [k for k in range(1, n + 1) if 2 * alpha > n + k - 1]
    if not ks:
        raise Skip(HYPOTHESIS_FALSE, "alpha <= n/2")
    xi = f.omega.xi
    for k in ks:
        need = k + 2 if (n + k - 1) % 2 == 0 else k + 1
        if xi < need:
            return False, {"n": n, "alpha": alpha, "k": k, "xi": xi, "required": need}
    return True, {"n": n, "alpha": alpha, "xi": xi, "k_max": ks[-1]}


def _c17_ker_in_core(f: _Facts) -> Verdict:
    core = f.omega.core
    outside = sorted(set(f.ker) - set(core))
    return not outside, {"ker": f.labels(f.ker), "core": f.labels(core),
                         "ker_minus_core": f.labels(outside)}


CHECKS: dict[str, Callable[[_Facts], Verdict]] = {
    "C1": _c1_quasi_regularizable,
    "C2": _c2_berge,
    "C3": _c3_ke_matching,
    "C4": _c4_dc_equals_idc,
    "C5": _c5_critical_chain,
    "C6": _c6_decomposition,
    "C7": _c7_lorentzen,
    "C8": _c8_larson,
    "C9": _c9_supermodular,
    "C10": _c10_chain,
    "C11": _c11_strict_chain,
    "C12": _c12_core_exceeds_dc,
    "C13": _c13_core_not_one,
    "C14": _c14_pendants,
    "C15": _c15_core_exceeds_gap,
    "C16": _c16_hammer_bound,
    "C17": _c17_ker_in_core,
}


def run_check(check_id: str, facts: _Facts) -> CheckResult:
    try:
        ok, witness = CHECKS[check_id](facts)
    except Skip as exc:
        return CheckResult(check_id, SKIPPED, reason=str(exc))
    except (GuardExceeded, BudgetExceeded) as exc:
        return CheckResult(check_id, SKIPPED, reason=f"{GUARD_EXCEEDED}: {exc}")
    except Exception as exc:  # reported, never allowed to abort the run
        return CheckResult(check_id, SKIPPED, reason=f"{INTERNAL_ERROR}: {exc!r}")
    return CheckResult(check_id, PASS if ok else FAIL, witness)


def run_checks(G: Graph, config: VerifyConfig | None = None, name: str | None = None) -> VerificationReport:
    config = config or VerifyConfig()
    facts = _Facts(G, config)
    results = tuple(run_check(cid, facts) for cid in CHECK_IDS if cid in config.checks)
    summary: dict[str, Any] = {"name": name, "n": G.n, "m": G.m}
    return VerificationReport(summary, config, results)

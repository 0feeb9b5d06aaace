"""Reproducible random graphs.

The generator is a 64-bit LCG (multiplier 6364136223846793005, increment
1442695040888963407, arithmetic mod 2**64) whose state starts at the seed and
is advanced before every draw.  Floats are ``(state >> 11) / 2**53``;
bounded integers are ``((state >> 32) * k) >> 32``.  ``gnp`` uses
Batagelj-Brandes geometric skipping (one float per edge plus one) and
``tree`` attaches vertex ``v`` to ``randbelow(v)`` for ``v = 1..n-1``.
Any implementation of these few lines reproduces the same graphs.
"""

from __future__ import annotations

import math

from .graph import Graph

_MASK = (1 << 64) - 1
_MUL = 6364136223846793005
_INC = 1442695040888963407
_GOLDEN = 0x9E3779B97F4A7C15


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state * _MUL + _INC) & _MASK
        return self.state

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def randbelow(self, k: int) -> int:
        if k <= 0:
            raise ValueError("randbelow needs k >= 1")
        return ((self.next_u64() >> 32) * k) >> 32


def derive_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th graph of a corpus."""
    return (seed * _GOLDEN + index) & _MASK


def gnp(n: int, p: float, seed: int) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    edges: list[tuple[int, int]] = []
    if p == 1.0:
        edges = [(w, v) for v in range(1, n) for w in range(v)]
    elif p > 0.0:
        rng = Lcg64(seed)
        log_q = math.log(1.0 - p)
        v, w = 1, -1
        while v < n:
            w += 1 + int(math.log(1.0 - rng.random()) / log_q)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((w, v))
    return Graph.from_edges(edges, n=n)


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = Lcg64(seed)
    return Graph.from_edges([(rng.randbelow(v), v) for v in range(1, n)], n=n)


def parse_model(spec: str) -> tuple[str, int, float]:
    """``"gnp:12,0.2"`` -> ``("gnp", 12, 0.2)``; ``"tree:30"`` -> ``("tree", 30, 0.0)``."""
    model, _, args = spec.partition(":")
    parts = [a for a in args.split(",") if a]
    try:
        if model == "gnp" and len(parts) == 2:
            n, p = int(parts[0]), float(parts[1])
        elif model == "tree" and len(parts) == 1:
            n, p = int(parts[0]), 0.0
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad random source {spec!r}; use gnp:N,P or tree:N") from None
    if n < 1 or not 0.0 <= p <= 1.0:
        raise ValueError(f"bad random source {spec!r}; need N >= 1 and 0 <= P <= 1")
    return model, n, p


def make(model: str, n: int, p: float, seed: int) -> Graph:
    if model == "gnp":
        return gnp(n, p, seed)
    if model == "tree":
        return random_tree(n, seed)
    raise ValueError(f"unknown model {model!r}")


def corpus(model: str, n: int, p: float, count: int, seed: int) -> list[Graph]:
    return [make(model, n, p, derive_seed(seed, i)) for i in range(count)]

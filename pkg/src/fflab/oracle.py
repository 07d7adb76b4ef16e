"""Deliberately naive exhaustive game solver used as ground-truth oracle.

Backward-induction / value-iteration over all 2^n burning sets, enumerating
every firefighter set F with |F| <= m over the whole node set.  No pruning,
no move restrictions.  Capped at 15 nodes; meant to generate and cross-check
expected values for the production solver, never to be fast.
"""

from __future__ import annotations

import numpy as np

from .engine import FIREFIGHTER, HUNTER, Strategy, VARIANTS
from .graph import Graph

ORACLE_MAX_NODES = 15
_INF = np.int64(1) << 40


def _spread_table(g: Graph, variant: str) -> np.ndarray:
    """successor-of-propagation lookup for every subset mask."""
    size = 1 << g.n
    table = np.zeros(size, dtype=np.int64)
    adj = np.array(g.adj, dtype=np.int64) if g.n else np.zeros(0, dtype=np.int64)
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        prev = table[s ^ low]
        if variant == FIREFIGHTER:
            table[s] = prev | adj[v] | low
        else:
            table[s] = prev | adj[v]
    if variant == FIREFIGHTER and size:
        table[0] = 0
    return table


def all_firefighter_sets(n: int, m: int) -> list[int]:
    """Every F over [n] with |F| <= m, ordered by the sorted node tuple."""
    out: list[int] = []

    def grow(mask: int, start: int, left: int) -> None:
        out.append(mask)
        if left == 0:
            return
        for v in range(start, n):
            grow(mask | 1 << v, v + 1, left - 1)

    grow(0, 0, min(m, n))
    return out


class OracleTable:
    """Shortest extinguishing times from every burning set, for fixed m."""

    def __init__(self, g: Graph, m: int, variant: str = FIREFIGHTER):
        if variant not in VARIANTS:
            raise ValueError(f"unknown game variant {variant!r}")
        if g.n > ORACLE_MAX_NODES:
            raise ValueError(f"oracle capped at {ORACLE_MAX_NODES} nodes, got {g.n}")
        self.g = g
        self.m = m
        self.variant = variant
        self._fsets = all_firefighter_sets(g.n, m)
        self._table = _spread_table(g, variant)
        self.dist = self._value_iteration()

    def _value_iteration(self) -> np.ndarray:
        size = 1 << self.g.n
        states = np.arange(size, dtype=np.int64)
        dist = np.full(size, _INF, dtype=np.int64)
        dist[0] = 0
        fmasks = np.array(self._fsets, dtype=np.int64)
        while True:
            before = dist.copy()
            for f in fmasks:
                succ = self._table[states & ~f]
                np.minimum(dist, dist[succ] + 1, out=dist)
            if np.array_equal(before, dist):
                return dist

    def shortest_from(self, burning: int) -> int | None:
        d = int(self.dist[burning])
        return None if d >= _INF else d

    def winnable(self, burning: int) -> bool:
        return self.dist[burning] < _INF

    def shortest_T(self) -> int | None:
        return self.shortest_from(self.g.full_mask)

    def optimal_witness(self, burning: int | None = None) -> Strategy | None:
        """Greedy optimal strategy taking the lexicographically smallest set each step."""
        b = self.g.full_mask if burning is None else burning
        if not self.winnable(b):
            return None
        steps = []
        while b:
            want = self.dist[b] - 1
            for f in self._fsets:
                nxt = int(self._table[b & ~f])
                if self.dist[nxt] == want:
                    steps.append(f)
                    b = nxt
                    break
        return Strategy(max(self.m, 1), tuple(steps), provenance="oracle")


def oracle_is_m_winning(g: Graph, m: int, variant: str = FIREFIGHTER) -> bool:
    return OracleTable(g, m, variant).winnable(g.full_mask)


def oracle_shortest_T(g: Graph, m: int, variant: str = FIREFIGHTER) -> int | None:
    return OracleTable(g, m, variant).shortest_T()


def oracle_ffn(g: Graph, variant: str = FIREFIGHTER) -> int:
    """Minimum budget that extinguishes the graph; 0 for the empty graph."""
    if g.n == 0:
        return 0
    for m in range(1, g.n + 1):
        if oracle_is_m_winning(g, m, variant):
            return m
    raise AssertionError("covering all nodes in one step always wins")

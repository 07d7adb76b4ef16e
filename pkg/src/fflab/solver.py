"""Exact decision and optimization over the burning-set state space.

Forward breadth-first search from the fully burning set toward the empty set.
Three optimizations, each justified by step monotonicity:

* moves are restricted to subsets of the current burning set;
* dominance pruning keeps only states with no already-reached subset state;
* moves are unions of whole twin classes (true twins in the firefighter
  variant, where a covered clique node can always be traded for the whole
  clique; false twins in the hunter variant, where covering part of a class
  never changes the successor).

All three preserve the exact shortest winning length.  A naive reference
search without any of them lives alongside for cross-checking.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from .engine import FIREFIGHTER, HUNTER, VARIANTS, Strategy, step
from .graph import Graph, iter_bits, nodes_of

ENV_LIMIT_STATES = "FFLAB_LIMIT_STATES"
DEFAULT_MAX_STATES = 2_000_000


@dataclass(frozen=True)
class Limits:
    """Resource budget for a search; exceeding it is never reported as 'no'."""

    max_states: int = field(default_factory=lambda: int(os.environ.get(ENV_LIMIT_STATES, DEFAULT_MAX_STATES)))
    max_seconds: float | None = None


class LimitExceeded(RuntimeError):
    """Search ran out of its state or time budget before deciding."""

    def __init__(self, message: str, stats: dict):
        super().__init__(message)
        self.stats = stats


@dataclass
class SearchStats:
    expanded: int = 0
    generated: int = 0
    kept: int = 0
    pruned_dominated: int = 0
    depth_reached: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "expanded": self.expanded,
            "generated": self.generated,
            "kept": self.kept,
            "pruned_dominated": self.pruned_dominated,
            "depth_reached": self.depth_reached,
            "elapsed": round(self.elapsed, 6),
        }


# ---------------------------------------------------------------------------
# twin classes


def true_twin_classes(g: Graph) -> list[int]:
    """Maximal cliques of nodes with identical closed neighborhoods."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        key = g.adj[v] | 1 << v
        groups[key] = groups.get(key, 0) | 1 << v
    return sorted(groups.values())


def false_twin_classes(g: Graph) -> list[int]:
    """Maximal independent groups of nodes with identical open neighborhoods."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[g.adj[v]] = groups.get(g.adj[v], 0) | 1 << v
    return sorted(groups.values())


@dataclass(frozen=True)
class CliqueModules:
    """Partition of V into maximal true-twin classes plus the node->class map."""

    classes: tuple[int, ...]
    class_of: tuple[int, ...]


def clique_module_reduce(g: Graph) -> CliqueModules:
    classes = true_twin_classes(g)
    class_of = [0] * g.n
    for i, c in enumerate(classes):
        for v in iter_bits(c):
            class_of[v] = i
    return CliqueModules(tuple(classes), tuple(class_of))


def _moves_from_classes(burning: int, m: int, classes: list[int]) -> list[int]:
    """Unions of whole burning-restricted classes with at most m nodes, lex order."""
    live = [c & burning for c in classes if c & burning]
    sizes = [c.bit_count() for c in live]
    out: list[int] = []

    def grow(mask: int, start: int, budget: int) -> None:
        out.append(mask)
        for i in range(start, len(live)):
            if sizes[i] <= budget:
                grow(mask | live[i], i + 1, budget - sizes[i])

    grow(0, 0, m)
    out.sort(key=nodes_of)
    return out


# ---------------------------------------------------------------------------
# production search


def _search(
    g: Graph,
    m: int,
    variant: str,
    limits: Limits,
    max_depth: int | None,
    twin_moves: bool,
) -> tuple[int | None, Strategy | None, SearchStats]:
    """Shortest winning length within max_depth, its witness, and search stats."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown game variant {variant!r}")
    if m < 0:
        raise ValueError("budget must be >= 0")
    stats = SearchStats()
    start = time.monotonic()
    full = g.full_mask
    if full == 0:
        return 0, Strategy(max(m, 1), ()), stats

    if twin_moves:
        classes = true_twin_classes(g) if variant == FIREFIGHTER else false_twin_classes(g)
    else:
        classes = [1 << v for v in range(g.n)]

    depth = {full: 0}
    parent: dict[int, tuple[int, int]] = {}
    frontier = [full]
    kept_by_pc: dict[int, list[int]] = {full.bit_count(): [full]}
    stats.kept = 1

    def dominated(c: int) -> bool:
        pc = c.bit_count()
        for size, bucket in kept_by_pc.items():
            if size <= pc:
                for k in bucket:
                    if k & c == k:
                        return True
        return False

    d = 0
    while frontier:
        if max_depth is not None and d >= max_depth:
            stats.elapsed = time.monotonic() - start
            return None, None, stats
        d += 1
        stats.depth_reached = d
        new_layer: list[int] = []
        for state in sorted(frontier):
            stats.expanded += 1
            for move in _moves_from_classes(state, m, classes):
                succ = step(g, state, move, variant)
                stats.generated += 1
                if succ == 0:
                    parent[0] = (state, move)
                    stats.elapsed = time.monotonic() - start
                    return d, _reconstruct(parent, m, full), stats
                if dominated(succ) or any(k & succ == k and k != succ for k in new_layer):
                    stats.pruned_dominated += 1
                    continue
                # drop same-layer strict supersets so the layer stays an antichain
                new_layer = [s for s in new_layer if succ & s != succ or s == succ]
                if succ not in depth:
                    depth[succ] = d
                    parent[succ] = (state, move)
                    new_layer.append(succ)
            if stats.kept + len(new_layer) > limits.max_states:
                stats.elapsed = time.monotonic() - start
                raise LimitExceeded(
                    f"state budget {limits.max_states} exhausted at depth {d}", stats.to_json()
                )
            if limits.max_seconds is not None and time.monotonic() - start > limits.max_seconds:
                stats.elapsed = time.monotonic() - start
                raise LimitExceeded(f"time budget {limits.max_seconds}s exhausted", stats.to_json())
        for s in new_layer:
            kept_by_pc.setdefault(s.bit_count(), []).append(s)
        stats.kept += len(new_layer)
        frontier = new_layer
    stats.elapsed = time.monotonic() - start
    return None, None, stats


def _reconstruct(parent: dict[int, tuple[int, int]], m: int, full: int) -> Strategy:
    moves = []
    state = 0
    while state != full:
        prev, move = parent[state]
        moves.append(move)
        state = prev
    return Strategy(max(m, 1), tuple(reversed(moves)), provenance="solver")


# ---------------------------------------------------------------------------
# public solver API


@dataclass(frozen=True)
class Decision:
    winning: bool
    witness: Strategy | None
    stats: SearchStats


def is_m_winning(
    g: Graph,
    m: int,
    variant: str = FIREFIGHTER,
    limits: Limits | None = None,
    twin_moves: bool = True,
) -> Decision:
    """Does a winning m-strategy exist?  Yes-answers carry a verified witness."""
    T, witness, stats = _search(g, m, variant, limits or Limits(), None, twin_moves)
    return Decision(T is not None, witness, stats)


def shortest_T(
    g: Graph,
    m: int,
    variant: str = FIREFIGHTER,
    limits: Limits | None = None,
    max_depth: int | None = None,
    twin_moves: bool = True,
) -> tuple[int | None, Strategy | None, SearchStats]:
    """Length of the shortest winning m-strategy, or None if there is none."""
    return _search(g, m, variant, limits or Limits(), max_depth, twin_moves)


def is_winning_in_time(
    g: Graph,
    m: int,
    t: int,
    variant: str = FIREFIGHTER,
    limits: Limits | None = None,
) -> bool:
    """Is the graph m-winning within t steps?"""
    if t < 0:
        raise ValueError("time horizon must be >= 0")
    T, _, _ = _search(g, m, variant, limits or Limits(), t, True)
    return T is not None


@dataclass(frozen=True)
class SolveResult:
    """Exact game number with optional shortest length and witness."""

    value: int
    variant: str
    t_m: int | None
    witness: Strategy | None
    stats: SearchStats

    def to_json(self) -> dict:
        return {
            "ffn": self.value,
            "variant": self.variant,
            "t_m": self.t_m,
            "witness": self.witness.to_json() if self.witness else None,
            "stats": self.stats.to_json(),
        }


def ffn(g: Graph, variant: str = FIREFIGHTER, limits: Limits | None = None) -> SolveResult:
    """Minimum budget extinguishing the graph (0 for the empty graph)."""
    limits = limits or Limits()
    if g.n == 0:
        return SolveResult(0, variant, 0, Strategy(1, ()), SearchStats())
    lo = 1
    if variant == FIREFIGHTER:
        from .bounds import lb_edge_count, lb_min_degree

        lo = max(1, lb_min_degree(g), lb_edge_count(g))
    for m in range(lo, g.n + 1):
        T, witness, stats = _search(g, m, variant, limits, None, True)
        if T is not None:
            return SolveResult(m, variant, T, witness, stats)
    raise AssertionError("extinguishing all nodes at once always wins")


def hn(g: Graph, limits: Limits | None = None) -> SolveResult:
    """Hunter number: same search under the forced-move propagation rule."""
    return ffn(g, HUNTER, limits)


# ---------------------------------------------------------------------------
# naive reference search (no pruning, full move enumeration) for cross-checks


def naive_shortest_T(g: Graph, m: int, variant: str = FIREFIGHTER) -> int | None:
    """Plain BFS over burning sets trying every F over V with |F| <= m."""
    from .oracle import all_firefighter_sets

    full = g.full_mask
    if full == 0:
        return 0
    fsets = all_firefighter_sets(g.n, m)
    seen = {full}
    frontier = [full]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for state in frontier:
            for f in fsets:
                succ = step(g, state, f, variant)
                if succ == 0:
                    return d
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
    return None


def naive_is_m_winning(g: Graph, m: int, variant: str = FIREFIGHTER) -> bool:
    return naive_shortest_T(g, m, variant) is not None

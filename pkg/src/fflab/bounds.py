"""Cheap and certificate-bearing lower bounds, constructive upper bounds,
characterizations, LimitedNeighbours solvers, and the classification-conjecture
checker.

Lower bounds are sound claims "ffn >= value"; the expansion ones carry a
checkable certificate (an induced node set V' and a size i such that every
W in V' with |W| = i has at least m-1 neighbors inside the induced subgraph).
Constructive upper bounds always return an engine-verified strategy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .engine import Strategy, is_winning
from .graph import (
    Graph,
    adjacent_union,
    connected_components,
    induced_subgraph,
    is_caterpillar_forest,
    is_forest,
    iter_bits,
    mask_of,
    neighborhood,
    nodes_of,
    to_graph6,
)

LN_BRUTEFORCE_MAX_NODES = 24


@dataclass(frozen=True)
class Certificate:
    """Lower-bound witness: kind tag plus kind-specific data.

    For the expansion kinds, (v_prime, i, m) claims that every W inside the
    induced subgraph on v_prime with |W| = i has at least m-1 neighbors
    there, which forces ffn >= m.
    """

    kind: str
    m: int
    v_prime: int | None = None
    i: int | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "m": self.m}
        if self.v_prime is not None:
            out["V_prime"] = nodes_of(self.v_prime)
        if self.i is not None:
            out["i"] = self.i
        return out


def certificate_valid(g: Graph, cert: Certificate) -> bool:
    """Re-check a certificate from scratch."""
    if cert.kind == "min_degree":
        return g.n >= 1 and g.min_degree() + 1 >= cert.m
    if cert.kind == "edge_count":
        return lb_edge_count(g) >= cert.m
    if cert.kind in ("expansion", "subgraph_expansion"):
        if cert.v_prime is None or cert.i is None:
            return False
        sub, _ = induced_subgraph(g, cert.v_prime)
        if not (1 <= cert.i <= sub.n - cert.m + 1):
            return False
        return _min_neighbors_of_size(sub, cert.i) >= cert.m - 1
    return False


# ---------------------------------------------------------------------------
# cheap lower bounds


def lb_min_degree(g: Graph) -> int:
    """ffn >= minimum degree + 1."""
    if g.n < 1:
        raise ValueError("lower bound needs at least one node")
    return g.min_degree() + 1


def lb_edge_count(g: Graph) -> int:
    """Largest m in [1..n] with 2|E| >= m(2|V| - m - 1); ffn >= that m."""
    if g.n < 1:
        raise ValueError("lower bound needs at least one node")
    twice = 2 * g.edge_count
    best = 1
    for m in range(1, g.n + 1):
        if twice >= m * (2 * g.n - m - 1):
            best = m
    return best


# ---------------------------------------------------------------------------
# LimitedNeighbours


def limited_neighbours_bruteforce(g: Graph, m: int, k: int) -> int | None:
    """Is there W with |W| = k and |N(W)| <= m-1?  Witness mask or None."""
    if g.n > LN_BRUTEFORCE_MAX_NODES:
        raise ValueError(f"brute force capped at {LN_BRUTEFORCE_MAX_NODES} nodes")
    if not 0 <= k <= g.n:
        return None
    for combo in combinations(range(g.n), k):
        w = mask_of(combo)
        if neighborhood(g, w).bit_count() <= m - 1:
            return w
    return None


def limited_neighbours_bounded_m(g: Graph, m: int, k: int) -> int | None:
    """Same question solved by removing every candidate neighborhood S with
    |S| <= m-1 and packing whole remaining components to size k by subset-sum."""
    if not 0 <= k <= g.n:
        return None
    if k == 0:
        return 0
    for size in range(0, m):
        for combo in combinations(range(g.n), size):
            s_mask = mask_of(combo)
            rest = g.full_mask & ~s_mask
            comps = _components_within(g, rest)
            pick = _subset_sum_pick([c.bit_count() for c in comps], k)
            if pick is not None:
                w = 0
                for idx in pick:
                    w |= comps[idx]
                return w
    return None


def _components_within(g: Graph, inside: int) -> list[int]:
    comps = []
    todo = inside
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            grown = adjacent_union(g, frontier) & inside & ~comp
            comp |= grown
            frontier = grown
        comps.append(comp)
        todo &= ~comp
    return comps


def _subset_sum_pick(sizes: list[int], target: int) -> list[int] | None:
    """Indices of a sub-multiset summing to target, via the standard DP."""
    parent: dict[int, tuple[int, int] | None] = {0: None}
    for idx, s in enumerate(sizes):
        for total in sorted(parent, reverse=True):
            new = total + s
            if new <= target and new not in parent:
                parent[new] = (total, idx)
    if target not in parent:
        return None
    picks = []
    cur = target
    while parent[cur] is not None:
        prev, idx = parent[cur]
        picks.append(idx)
        cur = prev
    return picks[::-1]


# ---------------------------------------------------------------------------
# expansion bounds


def _min_neighbors_of_size(g: Graph, i: int) -> int:
    return min(
        neighborhood(g, mask_of(combo)).bit_count() for combo in combinations(range(g.n), i)
    )


def expansion_holds(g: Graph, i: int, m: int) -> bool:
    """Does every W with |W| = i have at least m-1 neighbors?"""
    if not 1 <= i <= g.n - m + 1:
        raise ValueError(f"need 1 <= i <= n-m+1, got i={i}, m={m}, n={g.n}")
    return limited_neighbours_bruteforce(g, m - 1, i) is None


def enumerate_connected_sets(g: Graph, max_size: int, cap: int) -> list[int]:
    """Connected induced node sets up to max_size, at most cap of them."""
    seen: set[int] = set()
    order: list[int] = []

    def grow(mask: int, lowest: int) -> None:
        if len(order) >= cap:
            return
        ext = adjacent_union(g, mask) & ~mask & ~((1 << (lowest + 1)) - 1)
        for u in iter_bits(ext):
            new = mask | 1 << u
            if new not in seen and new.bit_count() <= max_size:
                seen.add(new)
                order.append(new)
                grow(new, lowest)

    for v in range(g.n):
        if len(order) >= cap:
            break
        start = 1 << v
        seen.add(start)
        order.append(start)
        grow(start, v)
    return order


def lb_subgraph_expansion(g: Graph, search_budget: int = 5000) -> tuple[int, Certificate | None]:
    """Best expansion bound over induced subgraphs, with its certificate.

    Exhaustive over all induced subgraphs up to 7 nodes; beyond that it
    enumerates connected induced sets of at most 7 nodes (budget-capped) and
    the whole node set when small enough.  Budget exhaustion just returns the
    weaker bound found so far.
    """
    if g.n == 0:
        return 0, None
    first = 1
    best = (1, Certificate("subgraph_expansion", 1, v_prime=first, i=1))
    if g.n <= 7:
        candidates: Iterable[int] = range(1, 1 << g.n)
    else:
        candidates = enumerate_connected_sets(g, 7, search_budget)
        if g.n <= 15:
            candidates = list(candidates) + [g.full_mask]
    for v_prime in candidates:
        size = v_prime.bit_count()
        if size <= best[0]:
            continue
        sub, _ = induced_subgraph(g, v_prime)
        for i in range(1, size + 1):
            cap = size - i + 1
            if cap <= best[0]:
                break
            m = min(_min_neighbors_of_size(sub, i) + 1, cap)
            if m > best[0]:
                best = (m, Certificate("subgraph_expansion", m, v_prime=v_prime, i=i))
    return best


# ---------------------------------------------------------------------------
# constructive upper bounds


class ConstructionFailure(RuntimeError):
    """An upper-bound construction produced a losing strategy (internal error)."""


def ub_constructive(g: Graph, hints: dict | None = None) -> tuple[int, Strategy]:
    """Smallest verified constructive upper bound among the applicable rules.

    Rules tried: one-per-step on edgeless graphs, the width-1 sweep on
    caterpillar forests, a supplied path decomposition, the tree-diameter
    recursion on forests, removal of a minimum vertex cover, and the
    everything-at-once fallback.
    """
    from .strategies import (
        caterpillar_decomposition,
        strategy_edgeless,
        strategy_forest,
        strategy_path_decomposition,
    )

    if g.n == 0:
        return 0, Strategy(1, (), provenance="empty")
    candidates: list[tuple[int, Strategy]] = []
    if g.edge_count == 0:
        candidates.append((1, strategy_edgeless(g)))
    elif is_caterpillar_forest(g):
        candidates.append((2, strategy_path_decomposition(g, caterpillar_decomposition(g))))
    if hints and "path_decomposition" in hints:
        s = strategy_path_decomposition(g, hints["path_decomposition"])
        candidates.append((s.m, s))
    if g.edge_count and is_forest(g):
        s = strategy_forest(g)
        candidates.append((s.m, s))
    if g.n <= LN_BRUTEFORCE_MAX_NODES:
        cover = g.full_mask & ~max_independent_set(g)
        free = nodes_of(g.full_mask & ~cover)
        if free:
            steps = tuple(cover | 1 << v for v in free)
        else:
            steps = (g.full_mask,)
        size = max(cover.bit_count() + 1, 1) if free else g.n
        s = Strategy(size, steps, provenance="vertex-cover")
        if not is_winning(g, s):
            raise ConstructionFailure("vertex-cover strategy failed verification")
        candidates.append((size, s))
    candidates.append((g.n, Strategy(g.n, (g.full_mask,), provenance="all-at-once")))
    return min(candidates, key=lambda c: c[0])


def max_independent_set(g: Graph) -> int:
    """Exact maximum independent set by branch and bound (desk scale)."""
    best = 0

    def rec(avail: int, cur: int) -> None:
        nonlocal best
        if cur.bit_count() + avail.bit_count() <= best.bit_count():
            return
        if not avail:
            if cur.bit_count() > best.bit_count():
                best = cur
            return
        v = max(iter_bits(avail), key=lambda u: (g.adj[u] & avail).bit_count())
        rec(avail & ~(1 << v), cur)
        rec(avail & ~(g.adj[v] | 1 << v), cur | 1 << v)

    rec(g.full_mask, 0)
    return best


# ---------------------------------------------------------------------------
# closed-form bounds


def forest_bound(g: Graph) -> float:
    """log_3(2|V| + 1) + 2; an upper bound on ffn for forests."""
    if not is_forest(g):
        raise ValueError("forest bound needs a forest")
    return math.log(2 * g.n + 1, 3) + 2


_BINARY_TREE_TABLE = {0: (1, 1), 1: (2, 2), 2: (2, 2), 3: (3, 3), 4: (3, 3), 5: (3, 4), 6: (3, 4)}


@dataclass(frozen=True)
class BinaryTreeBounds:
    """Bounds on ffn of the complete binary tree of a given depth.

    For depth <= 6 both bounds are inclusive (equal when exact).  For
    depth >= 7 the lower bound is strict (ffn > lower) per the closed form.
    """

    lower: float
    upper: int
    lower_strict: bool

    @property
    def implied_lower(self) -> int:
        if self.lower_strict:
            return math.floor(self.lower) + 1
        return math.ceil(self.lower)


def binary_tree_bounds(d: int) -> BinaryTreeBounds:
    if d < 0:
        raise ValueError("depth must be >= 0")
    if d <= 6:
        lo, hi = _BINARY_TREE_TABLE[d]
        return BinaryTreeBounds(float(lo), hi, lower_strict=False)
    lower = (d - 1) // 2 - 0.5 * math.log2((d - 5) // 2) - 2
    upper = (d + 1) // 2 + 1
    return BinaryTreeBounds(lower, upper, lower_strict=True)


# ---------------------------------------------------------------------------
# flips arithmetic (binary-tree lower-bound machinery)


def hamming_weight(x: int) -> int:
    if x < 0:
        raise ValueError("hamming weight of a negative number")
    return x.bit_count()


def flips(x: int) -> int:
    """Number of bit transitions in the binary representation."""
    if x < 0:
        raise ValueError("flips of a negative number")
    return (x ^ (x >> 1)).bit_count() - (1 if x else 0)


def alternating_sum(d: int) -> int:
    """2^1 + 2^3 + ... + 2^d for odd d: the 1010...10 pattern on d+1 digits."""
    if d < 1 or d % 2 == 0:
        raise ValueError("need odd d >= 1")
    return sum(1 << (2 * i + 1) for i in range((d - 1) // 2 + 1))


def check_alternating_flips(d: int, x: int) -> bool:
    """flips(S_d + x) >= d - floor(log2|x|) - 4 for x != 0, and = d at x = 0."""
    s = alternating_sum(d)
    if x == 0:
        return flips(s) == d
    bound = d - math.floor(math.log2(abs(x))) - 4
    if bound <= 0:
        return True
    total = s + x
    if total < 0:
        return False
    return flips(total) >= bound


# ---------------------------------------------------------------------------
# characterization and conjecture


def char_small_ffn(g: Graph) -> int | None:
    """1 for edgeless graphs, 2 for caterpillar forests with an edge, else None.

    The empty graph gets 0, matching the solver's convention.
    """
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    if is_caterpillar_forest(g):
        return 2
    return None


def find_conjecture_certificate(g: Graph, m: int) -> Certificate | None:
    """Induced subgraph V' and i in [|V'|-m] where every i-subset has >= m
    neighbors inside V'; such a certificate forces ffn > m."""
    for v_prime in range(1, 1 << g.n):
        size = v_prime.bit_count()
        if size < m + 1:
            continue
        sub, _ = induced_subgraph(g, v_prime)
        for i in range(1, size - m + 1):
            if _min_neighbors_of_size(sub, i) >= m:
                return Certificate("subgraph_expansion", m + 1, v_prime=v_prime, i=i)
    return None


@dataclass
class ConjectureReport:
    """Both directions of the classification conjecture on one graph."""

    graph6: str
    ffn: int
    forward_violations: list[dict]
    reverse_counterexamples: list[dict]

    @property
    def consistent(self) -> bool:
        return not self.forward_violations and not self.reverse_counterexamples

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "ffn": self.ffn,
            "consistent": self.consistent,
            "forward_violations": self.forward_violations,
            "reverse_counterexamples": self.reverse_counterexamples,
        }


def check_conjecture(g: Graph, ffn_oracle: Callable[[Graph], int], max_m: int | None = None) -> ConjectureReport:
    """Evaluate certificate existence against exact ffn for every m.

    A certificate without ffn > m violates a proven implication and is a hard
    error; ffn > m without a certificate is only a counterexample report for
    the conjectured reverse direction.  Only induced subgraphs are searched.
    """
    value = ffn_oracle(g)
    forward: list[dict] = []
    reverse: list[dict] = []
    top = max_m if max_m is not None else max(g.n - 1, 0)
    for m in range(1, top + 1):
        cert = find_conjecture_certificate(g, m)
        if cert is not None and not value > m:
            forward.append({"m": m, "ffn": value, "certificate": cert.to_json()})
        if value > m and cert is None:
            reverse.append({"m": m, "ffn": value})
    return ConjectureReport(to_graph6(g), value, forward, reverse)


# ---------------------------------------------------------------------------
# aggregate report


def bound_report(g: Graph, pathdecomp=None, expansion_budget: int = 5000) -> dict:
    """All applicable bounds with certificates and a verified upper strategy."""
    report: dict = {"n": g.n, "edges": g.edge_count}
    lowers = []
    if g.n >= 1:
        lowers.append({"kind": "min_degree", "value": lb_min_degree(g)})
        lowers.append({"kind": "edge_count", "value": lb_edge_count(g)})
        value, cert = lb_subgraph_expansion(g, expansion_budget)
        entry = {"kind": "subgraph_expansion", "value": value}
        if cert is not None:
            entry["certificate"] = cert.to_json()
        lowers.append(entry)
    report["lower_bounds"] = lowers
    report["characterization"] = char_small_ffn(g)
    hints = {"path_decomposition": pathdecomp} if pathdecomp else None
    ub, strategy = ub_constructive(g, hints)
    report["upper_bound"] = {"value": ub, "rule": strategy.provenance, "strategy": strategy.to_json()}
    if is_forest(g):
        fb = forest_bound(g)
        report["forest_log_bound"] = {"value": fb, "implied_upper": math.floor(fb)}
    else:
        report["forest_log_bound"] = None
    best_lower = max([e["value"] for e in lowers], default=0)
    if report["characterization"] is not None:
        best_lower = max(best_lower, report["characterization"])
    report["best_lower"] = best_lower
    report["best_upper"] = min(
        ub,
        report["characterization"] if report["characterization"] is not None else ub,
    )
    return report

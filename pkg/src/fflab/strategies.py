"""Explicit winning-strategy constructors; every output is engine-verified.

Transcribing a prose construction can go wrong in many small ways, so each
builder runs its result through the verifier before returning it and raises
ConstructionError instead of ever handing back an unverified strategy.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .engine import FIREFIGHTER, HUNTER, Strategy, doubled, is_winning, verify
from .gadgets import LabeledGadget, hunter_transform
from .graph import (
    Graph,
    adjacent_union,
    connected_components,
    is_tree,
    iter_bits,
    mask_of,
    nodes_of,
)


class ConstructionError(RuntimeError):
    """A transcribed strategy failed verification or its preconditions."""


def _verified(g: Graph, s: Strategy, variant: str = FIREFIGHTER) -> Strategy:
    res = verify(g, s, variant)
    if not res.won:
        raise ConstructionError(
            f"constructed strategy ({s.provenance}) loses: {res.final_burning.bit_count()} "
            f"nodes still burning after step {res.final_time}"
        )
    return s


# ---------------------------------------------------------------------------
# basic families


def strategy_edgeless(g: Graph) -> Strategy:
    """One node per step; the fire has nowhere to spread."""
    if g.edge_count:
        raise ConstructionError("graph has an edge; the one-firefighter strategy needs none")
    s = Strategy(1, tuple(1 << v for v in range(g.n)), provenance="edgeless")
    return _verified(g, s)


def strategy_clique(n: int) -> Strategy:
    """Extinguish all nodes simultaneously."""
    if n < 1:
        raise ValueError("clique strategy needs n >= 1")
    return Strategy(n, ((1 << n) - 1,), provenance="clique")


# ---------------------------------------------------------------------------
# path decompositions


def normalize_bags(bags: Sequence[Iterable[int] | int]) -> list[int]:
    return [b if isinstance(b, int) else mask_of(b) for b in bags]


def validate_path_decomposition(g: Graph, bags: Sequence[Iterable[int] | int]) -> int:
    """Check coverage and contiguity; returns the width (max bag size - 1)."""
    masks = normalize_bags(bags)
    if not masks and g.n:
        raise ValueError("empty path decomposition for a nonempty graph")
    seen = 0
    for b in masks:
        if b & ~g.full_mask:
            raise ValueError("bag contains nodes outside the graph")
        seen |= b
    if seen != g.full_mask:
        raise ValueError("some node appears in no bag")
    for u, v in g.edges():
        if not any(b >> u & 1 and b >> v & 1 for b in masks):
            raise ValueError(f"edge ({u}, {v}) is contained in no bag")
    for v in range(g.n):
        hits = [i for i, b in enumerate(masks) if b >> v & 1]
        if hits and hits[-1] - hits[0] + 1 != len(hits):
            raise ValueError(f"bags containing node {v} are not contiguous")
    return max(b.bit_count() for b in masks) - 1 if masks else 0


def strategy_path_decomposition(g: Graph, bags: Sequence[Iterable[int] | int]) -> Strategy:
    """Sweep the decomposition: firefighter set t is bag t.

    If the plain sweep ever failed verification, fall back to holding each
    bag for two consecutive steps; whichever variant verified is recorded in
    the provenance.
    """
    masks = normalize_bags(bags)
    width = validate_path_decomposition(g, masks)
    budget = max(width + 1, 1)
    plain = Strategy(budget, tuple(masks), provenance="path-decomposition")
    if is_winning(g, plain):
        return plain
    slow = Strategy(
        budget, tuple(b for bag in masks for b in (bag, bag)), provenance="path-decomposition-doubled"
    )
    if is_winning(g, slow):
        return slow
    raise ConstructionError("path decomposition sweep failed verification in both variants")


def caterpillar_decomposition(g: Graph) -> list[int]:
    """Width-one path decomposition of a caterpillar forest."""
    bags: list[int] = []
    for comp in connected_components(g):
        nodes = nodes_of(comp)
        if len(nodes) == 1:
            bags.append(comp)
            continue
        if len(nodes) == 2:
            bags.append(comp)
            continue
        leaves = mask_of(v for v in nodes if (g.adj[v] & comp).bit_count() == 1)
        spine_mask = comp & ~leaves
        spine = nodes_of(spine_mask)
        if any((g.adj[v] & spine_mask).bit_count() > 2 for v in spine):
            raise ConstructionError("component is not a caterpillar")
        start = next(v for v in spine if (g.adj[v] & spine_mask).bit_count() <= 1)
        order = [start]
        while True:
            nxt = g.adj[order[-1]] & spine_mask & ~mask_of(order)
            if not nxt:
                break
            order.append((nxt & -nxt).bit_length() - 1)
        if len(order) != len(spine):
            raise ConstructionError("caterpillar spine is not a path")
        for idx, s in enumerate(order):
            for leaf in iter_bits(g.adj[s] & leaves):
                bags.append(1 << s | 1 << leaf)
            if idx + 1 < len(order):
                bags.append(1 << s | 1 << order[idx + 1])
    return bags


# ---------------------------------------------------------------------------
# trees


def _masked_bfs(g: Graph, inside: int, start: int) -> dict[int, int]:
    dist = {start: 0}
    frontier = 1 << start
    seen = frontier
    d = 0
    while frontier:
        d += 1
        grown = adjacent_union(g, frontier) & inside & ~seen
        for v in iter_bits(grown):
            dist[v] = d
        seen |= grown
        frontier = grown
    return dist


def _center_of_longest_path(g: Graph, comp: int) -> int:
    """Middle node of a longest path inside the component (a tree)."""
    first = (comp & -comp).bit_length() - 1
    d0 = _masked_bfs(g, comp, first)
    u = max(d0, key=lambda v: (d0[v], v))
    du = _masked_bfs(g, comp, u)
    w = max(du, key=lambda v: (du[v], v))
    # walk back from w to u to recover the path
    path = [w]
    while path[-1] != u:
        cur = path[-1]
        nxt = next(v for v in iter_bits(g.adj[cur] & comp) if du.get(v, -1) == du[cur] - 1)
        path.append(nxt)
    return path[len(path) // 2]


def strategy_tree_diameter(g: Graph, m: int) -> Strategy:
    """Center-held recursion for a tree with diameter at most 2m-2."""
    if not is_tree(g):
        raise ConstructionError("tree-diameter strategy needs a tree")
    steps = _tree_steps(g, g.full_mask, m)
    s = Strategy(max(m, 1), tuple(steps), provenance="tree-diameter")
    return _verified(g, s)


def _tree_steps(g: Graph, comp: int, m: int) -> list[int]:
    if m < 1:
        raise ConstructionError("diameter exceeds 2m-2; not enough firefighters")
    if comp.bit_count() == 1:
        return [comp]
    r = _center_of_longest_path(g, comp)
    rest = comp & ~(1 << r)
    steps: list[int] = []
    remaining = rest
    while remaining:
        seed = remaining & -remaining
        sub = seed
        frontier = seed
        while frontier:
            grown = adjacent_union(g, frontier) & rest & ~sub
            sub |= grown
            frontier = grown
        for f in _tree_steps(g, sub, m - 1):
            steps.append(f | 1 << r)
        remaining &= ~sub
    return steps


def strategy_forest(g: Graph) -> Strategy:
    """Per-component tree-diameter strategies, concatenated."""
    from .graph import induced_subgraph  # local import keeps the top tidy

    comps = connected_components(g)
    budget = 1
    parts: list[list[int]] = []
    for comp in comps:
        sub, old = induced_subgraph(g, comp)
        if not is_tree(sub):
            raise ConstructionError("forest strategy needs a forest")
        diam = max(max(_masked_bfs(sub, sub.full_mask, v).values()) for v in range(sub.n))
        m = (diam + 1) // 2 + 1
        budget = max(budget, m)
        parts.append([mask_of(old[v] for v in iter_bits(f)) for f in _tree_steps(sub, sub.full_mask, m)])
    steps = [f for part in parts for f in part]
    s = Strategy(budget, tuple(steps), provenance="forest-diameter")
    return _verified(g, s)


def strategy_binary_tree(d: int) -> Strategy:
    """Root-holding recursion on the complete binary tree; budget ceil(d/2)+1."""
    from .graph import binary_tree

    if d < 0:
        raise ValueError("depth must be >= 0")
    g = binary_tree(d)

    def plain(root: int, depth: int) -> list[int]:
        if depth == 0:
            return [1 << root]
        left, right = 2 * root + 1, 2 * root + 2
        mid = [1 << left | 1 << root, 1 << root | 1 << right]
        return holding(left, depth - 1) + mid + holding(right, depth - 1)

    def holding(root: int, depth: int) -> list[int]:
        # winning strategy that covers its root in every step; depth is odd
        left, right = 2 * root + 1, 2 * root + 2
        inner_left = plain(left, depth - 1)
        inner_right = plain(right, depth - 1)
        return [f | 1 << root for f in inner_left + inner_right]

    if d == 0:
        steps = [1 << 0]
    elif d % 2:
        steps = holding(0, d)
    else:
        steps = plain(0, d)
    budget = (d + 1) // 2 + 1
    s = Strategy(budget, tuple(steps), provenance="binary-tree")
    return _verified(g, s)


# ---------------------------------------------------------------------------
# time gadget (seven phases)


def strategy_time_gadget(gadget: LabeledGadget, inner: Strategy) -> Strategy:
    """Seven-phase strategy with budget 4m for a gadget built from a
    T-winning m-strategy of the base graph; total length 4T^2+5T+5."""
    t, m = gadget.meta["t"], gadget.meta["m"]
    base_nodes = gadget.meta["base_nodes"]
    lab = gadget.labels
    a, b, x, y, z = lab["A"], lab["B"], lab["X"], lab["Y"], lab["Z"]
    if inner.m > m:
        raise ConstructionError(f"inner strategy budget {inner.m} exceeds m={m}")
    if len(inner) > t:
        raise ConstructionError(f"inner strategy length {len(inner)} exceeds T={t}")
    padded = list(inner.steps) + [0] * (t - len(inner))

    def blow(f: int) -> int:
        out = 0
        for v in iter_bits(f):
            if v >= base_nodes:
                raise ConstructionError("inner strategy targets nodes outside the base graph")
            out |= 0b11 << (2 * v)
        return out

    def sweep() -> list[int]:
        out = []
        for i in range(1, 2 * t + 3):
            for j in range(1, t + 1):
                out.append(a | b | lab[f"P_{i}_{j}"] | lab[f"P_{i}_{j + 1}"])
        return out

    steps = sweep()
    steps.append(a | b)  # hold step closing phase 1 at time 2T^2+2T+1
    steps.append(a | b | x)
    steps.append(x | y)
    steps.extend(y | blow(f) for f in padded)
    steps.append(y | z)
    steps.append(a | b | z)
    steps.extend(sweep())
    s = Strategy(4 * m, tuple(steps), provenance="time-gadget")
    assert len(s) == 4 * t * t + 5 * t + 5
    return _verified(gadget.graph, s)


# ---------------------------------------------------------------------------
# long-strategy family


def strategy_g_of(gadget: LabeledGadget, inner: Strategy) -> Strategy:
    """Budget-m strategy cycling through the aux blocks of g_of(m, X).

    inner must be a winning (m-1)-strategy for the X block (ids 0..|X|-1).
    Each round extinguishes the next aux block, re-clears the spider of paths
    while re-extinguishing X behind a held hub, and moves on.
    """
    m = gadget.meta["m"]
    beta = gadget.meta["beta"]
    lab = gadget.labels
    c = lab["c"]
    if inner.m > m - 1:
        raise ConstructionError(f"inner strategy budget {inner.m} exceeds m-1={m - 1}")

    def path_nodes(i: int) -> list[int]:
        return nodes_of(lab[f"P_{i}"])  # ordered v_1 .. v_beta (construction order)

    def u(i: int) -> int:
        return lab[f"u_{i}"]

    def h_phase(i: int) -> list[int]:
        return [lab[f"K_{i}"] | 1 << w for w in iter_bits(lab[f"W_{i}"])]

    def pairs(chain: list[int], holds: int) -> list[int]:
        return [chain[k] | chain[k + 1] | holds for k in range(len(chain) - 1)]

    def spider(q: int) -> list[int]:
        steps: list[int] = []
        # re-clear paths 1..q toward the hub, dropping each u_i hold as it clears
        for i in range(1, q + 1):
            later_holds = 0
            for j in range(i + 1, q + 1):
                later_holds |= u(j)
            chain = [u(i)] + [1 << v for v in reversed(path_nodes(i))]
            if i == 1:
                chain.append(c)
                steps += pairs(chain, later_holds)
            else:
                steps += pairs(chain, later_holds | c)
        # hold the hub and re-extinguish X
        steps += [c | f for f in inner.steps]
        # clear paths q+1..m outward, parking a firefighter on each cleared u_i
        held = 0
        for i in range(q + 1, m + 1):
            if i < m:
                chain = [1 << v for v in path_nodes(i)] + [u(i)]
                steps += pairs(chain, c | held)
                held |= u(i)
            else:
                chain = [c] + [1 << v for v in path_nodes(i)] + [u(i)]
                steps += pairs(chain, held)
        return steps

    steps: list[int] = []
    for q in range(1, m):
        steps += h_phase(q)
        steps += spider(q)
    steps += h_phase(m)
    s = Strategy(m, tuple(steps), provenance="g-of")
    return _verified(gadget.graph, s)


def strategy_g_family(m: int, params=None) -> Strategy:
    """Verified budget-m strategy for g_family(m), built along the recursion."""
    from .gadgets import GadgetParams, g_of

    params = params or GadgetParams()
    gadget = g_of(2, Graph.from_edges(1, []), params)
    strat = strategy_g_of(gadget, Strategy(1, (1,), provenance="single-node"))
    for k in range(3, m + 1):
        gadget = g_of(k, gadget.graph, params)
        strat = strategy_g_of(gadget, strat)
    return strat


# ---------------------------------------------------------------------------
# 3-partition trees


def find_three_partition(a: list[int]) -> list[tuple[int, int, int]] | None:
    """Exhaustive search for a partition into triples of equal sum (1-based)."""
    if len(a) % 3:
        return None
    k = len(a) // 3
    if sum(a) % k:
        return None
    target = sum(a) // k
    items = list(range(len(a)))

    def rec(remaining: list[int], acc: list[tuple[int, int, int]]):
        if not remaining:
            return acc
        first = remaining[0]
        for p in range(1, len(remaining) - 1):
            for q in range(p + 1, len(remaining)):
                i, j = remaining[p], remaining[q]
                if a[first] + a[i] + a[j] == target:
                    rest = [r for r in remaining if r not in (first, i, j)]
                    found = rec(rest, acc + [(first + 1, i + 1, j + 1)])
                    if found is not None:
                        return found
        return None

    return rec(items, [])


def strategy_three_partition(gadget: LabeledGadget, triples: list[tuple[int, int, int]]) -> Strategy:
    """One step per triple: the three trees plus the hub; exactly k steps."""
    lab = gadget.labels
    budget = gadget.meta["budget"]
    steps = [lab[f"T_{i}"] | lab[f"T_{j}"] | lab[f"T_{l}"] | lab["c"] for i, j, l in triples]
    s = Strategy(budget, tuple(steps), provenance="three-partition")
    return _verified(gadget.graph, s)


# ---------------------------------------------------------------------------
# hunter transfer


def hunter_strategy_from_ff(s: Strategy) -> Strategy:
    """(F1, F1, F2, F2, ...): wins the hunter game on the transform of the
    original graph regardless of which side the fugitive starts on."""
    return Strategy(s.m, doubled(s).steps, provenance="hunter-doubled")


def hunter_strategy_prune(s: Strategy, g_original: Graph) -> Strategy:
    """Intersect every firefighter set with the original node set; must stay
    winning on the transform (a failure would contradict the transfer lemma)."""
    transform = hunter_transform(g_original)
    keep = g_original.full_mask
    pruned = Strategy(s.m, tuple(f & keep for f in s.steps), provenance="hunter-pruned")
    res = verify(transform, pruned, HUNTER)
    if not res.won:
        raise ConstructionError("pruned hunter strategy lost; transfer lemma violated")
    return pruned


def split_even_odd(s: Strategy) -> tuple[Strategy, Strategy]:
    """(odd-position substrategy, even-position substrategy), 1-indexed."""
    odd = Strategy(s.m, s.steps[0::2], provenance="hunter-split-odd")
    even = Strategy(s.m, s.steps[1::2], provenance="hunter-split-even")
    return odd, even

"""Named gadget families and reduction instances, with labeled block structure.

Every constructor returns a LabeledGadget: the graph plus a map from role
names to node masks, so strategies and tests can address blocks by name
instead of recomputing indices.  Attachment points that the constructions
leave free ("an arbitrary node") are fixed to the lowest eligible id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, blowup2, mask_of, nodes_of


@dataclass(frozen=True)
class GadgetParams:
    """Fixed path/attachment sizes used by the long-strategy family."""

    alpha: int = 4
    beta: int = 1

    def __post_init__(self):
        if self.beta < 1 or self.alpha < 1:
            raise ValueError("alpha and beta must be positive")
        if not (2 * self.beta + 2 >= self.alpha >= self.beta + 3):
            raise ValueError(f"need 2*beta+2 >= alpha >= beta+3, got alpha={self.alpha}, beta={self.beta}")


@dataclass(frozen=True)
class LabeledGadget:
    """A graph plus named node blocks and construction metadata."""

    graph: Graph
    labels: dict[str, int]
    meta: dict = field(default_factory=dict)

    def block(self, name: str) -> int:
        return self.labels[name]

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": self.graph.edges(),
            "labels": {k: nodes_of(v) for k, v in self.labels.items()},
            "meta": self.meta,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _join(edges: list[tuple[int, int]], a: list[int], b: list[int]) -> None:
    edges.extend((u, v) for u in a for v in b)


def _clique(edges: list[tuple[int, int]], nodes: list[int]) -> None:
    edges.extend((nodes[i], nodes[j]) for i in range(len(nodes)) for j in range(i + 1, len(nodes)))


def aux_H(m: int, params: GadgetParams = GadgetParams()) -> LabeledGadget:
    """(m-1)-clique plus alpha independent common neighbors; m-1+alpha nodes."""
    if m < 2:
        raise ValueError("aux_H needs m >= 2")
    clique = list(range(m - 1))
    wings = list(range(m - 1, m - 1 + params.alpha))
    edges: list[tuple[int, int]] = []
    _clique(edges, clique)
    _join(edges, clique, wings)
    g = Graph.from_edges(m - 1 + params.alpha, edges)
    labels = {"K": mask_of(clique), "W": mask_of(wings)}
    return LabeledGadget(g, labels, {"m": m, "alpha": params.alpha})


def g_of(m: int, x: Graph, params: GadgetParams = GadgetParams()) -> LabeledGadget:
    """Core graph X + hub c + m paths of beta nodes, each ending in an aux block.

    X keeps node ids 0..|X|-1 so strategies for X compose unchanged.  The
    intended use has ffn(X) = m-1; that is recorded, not enforced.
    """
    if m < 2:
        raise ValueError("g_of needs m >= 2")
    a, b = params.alpha, params.beta
    edges = list(x.edges())
    c = x.n
    nxt = c + 1
    _join(edges, [c], list(range(x.n)))
    labels: dict[str, int] = {"X": x.full_mask, "c": 1 << c}
    for i in range(1, m + 1):
        pth = list(range(nxt, nxt + b))
        nxt += b
        clique = list(range(nxt, nxt + m - 1))
        nxt += m - 1
        wings = list(range(nxt, nxt + a))
        nxt += a
        u = clique[0]
        edges.append((c, pth[0]))
        edges.extend(zip(pth, pth[1:]))
        edges.append((pth[-1], u))
        _clique(edges, clique)
        _join(edges, clique, wings)
        labels[f"P_{i}"] = mask_of(pth)
        labels[f"K_{i}"] = mask_of(clique)
        labels[f"W_{i}"] = mask_of(wings)
        labels[f"H_{i}"] = mask_of(clique + wings)
        labels[f"u_{i}"] = 1 << u
    g = Graph.from_edges(nxt, edges)
    return LabeledGadget(g, labels, {"m": m, "alpha": a, "beta": b, "x_nodes": x.n})


def g_family(m: int, params: GadgetParams = GadgetParams()) -> LabeledGadget:
    """Recursive family: G_2 on a single core node, G_m = g_of(m, G_{m-1})."""
    if m < 2:
        raise ValueError("g_family needs m >= 2")
    gadget = g_of(2, Graph.from_edges(1, []), params)
    for k in range(3, m + 1):
        gadget = g_of(k, gadget.graph, params)
    return gadget


def time_gadget(g: Graph, t: int, m: int) -> LabeledGadget:
    """Timed-fuse gadget: 2-blowup of g on a clique ring with 2t+2 fuse paths.

    Blocks X, Y, Z are 2m-cliques, A, B and every path block are m-cliques;
    full bipartite joins per the defining block list.  Node count is
    2|V| + 6m + 2m + (2t+2)(t+1)m.
    """
    if t < 2:
        raise ValueError("time gadget needs t >= 2")
    if m < 1:
        raise ValueError("time gadget needs m >= 1")
    bg = blowup2(g)
    edges = list(bg.edges())
    nxt = bg.n

    def fresh(size: int) -> list[int]:
        nonlocal nxt
        block = list(range(nxt, nxt + size))
        nxt += size
        _clique(edges, block)
        return block

    x, y, z = fresh(2 * m), fresh(2 * m), fresh(2 * m)
    a, b = fresh(m), fresh(m)
    labels = {
        "G": bg.full_mask,
        "X": mask_of(x),
        "Y": mask_of(y),
        "Z": mask_of(z),
        "A": mask_of(a),
        "B": mask_of(b),
    }
    _join(edges, nodes_of(labels["G"]), y)
    _join(edges, a, x)
    _join(edges, x, y)
    _join(edges, y, z)
    _join(edges, z, b)
    paths_mask = 0
    for i in range(1, 2 * t + 3):
        prev = a
        path_mask = 0
        for j in range(1, t + 2):
            blk = fresh(m)
            _join(edges, prev, blk)
            labels[f"P_{i}_{j}"] = mask_of(blk)
            path_mask |= mask_of(blk)
            prev = blk
        _join(edges, prev, b)
        labels[f"P_{i}"] = path_mask
        paths_mask |= path_mask
    labels["paths"] = paths_mask
    graph = Graph.from_edges(nxt, edges)
    return LabeledGadget(graph, labels, {"t": t, "m": m, "base_nodes": g.n})


def binpacking_graph(sizes: list[int]) -> Graph:
    """Disjoint union of cliques K_{s_1}, ..., K_{s_n}."""
    if any(s < 1 for s in sizes):
        raise ValueError("item sizes must be positive")
    edges: list[tuple[int, int]] = []
    nxt = 0
    for s in sizes:
        _clique(edges, list(range(nxt, nxt + s)))
        nxt += s
    return Graph.from_edges(nxt, edges)


def three_partition_tree(a: list[int], shape: str = "star") -> LabeledGadget:
    """Hub node c joined to one node of each tree T_i with a_i + m nodes.

    shape "star" attaches c to the hub of a star (diameter <= 4), "path" to a
    path end (a spider), "arbitrary" to the root of a heap-shaped tree.
    Rejects instances where m/k is not integral (no 3-partition can exist).
    """
    if shape not in ("star", "path", "arbitrary"):
        raise ValueError(f"unknown shape {shape!r}")
    if not a or len(a) % 3:
        raise ValueError("need 3k item sizes")
    if any(v < 1 for v in a):
        raise ValueError("item sizes must be positive")
    k = len(a) // 3
    m = sum(a)
    if m % k:
        raise ValueError(f"m/k = {m}/{k} is not integral; instance has no 3-partition")
    edges: list[tuple[int, int]] = []
    c = 0
    nxt = 1
    labels = {"c": 1}
    for i, ai in enumerate(a, start=1):
        size = ai + m
        tree = list(range(nxt, nxt + size))
        nxt += size
        if shape == "star":
            hub = tree[0]
            edges.extend((hub, v) for v in tree[1:])
            attach = hub
        elif shape == "path":
            edges.extend(zip(tree, tree[1:]))
            attach = tree[0]
        else:
            edges.extend((tree[(j - 1) // 2], tree[j]) for j in range(1, size))
            attach = tree[0]
        edges.append((c, attach))
        labels[f"T_{i}"] = mask_of(tree)
    g = Graph.from_edges(nxt, edges)
    budget = m // k + 3 * m + 1
    return LabeledGadget(g, labels, {"k": k, "m": m, "budget": budget, "shape": shape})


def hunter_transform(g: Graph) -> Graph:
    """Replace each edge by |V|+1 disjoint length-2 paths through fresh nodes.

    Original nodes keep ids 0..n-1; the result is bipartite with the
    intermediate nodes on the other side.
    """
    edges: list[tuple[int, int]] = []
    nxt = g.n
    for u, v in g.edges():
        for _ in range(g.n + 1):
            edges.append((u, nxt))
            edges.append((nxt, v))
            nxt += 1
    return Graph.from_edges(nxt, edges)

"""Simple undirected graphs on dense node ids 0..n-1 with bitmask adjacency.

Node sets are plain Python ints used as bitmasks (bit v set <=> node v in the
set).  All graph operations are pure; Graph instances are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised on malformed edge-list or graph6 input; carries line/offset."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        loc = ""
        if line is not None:
            loc += f" (line {line}"
            loc += f", offset {offset})" if offset is not None else ")"
        elif offset is not None:
            loc += f" (offset {offset})"
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


def mask_of(nodes: Iterable[int]) -> int:
    """Pack an iterable of node ids into a bitmask."""
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def nodes_of(mask: int) -> list[int]:
    """Unpack a bitmask into a sorted list of node ids."""
    return list(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph; adj[v] is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("node count must be >= 0")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of node range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min_degree of the empty graph")
        return min(a.bit_count() for a in self.adj)


def neighborhood(g: Graph, w: int) -> int:
    """N(W): nodes outside w adjacent to at least one node of w."""
    if w & ~g.full_mask:
        raise ValueError("node set out of range")
    acc = 0
    for v in iter_bits(w):
        acc |= g.adj[v]
    return acc & ~w


def adjacent_union(g: Graph, w: int) -> int:
    """Union of open neighborhoods of w; may intersect w itself."""
    acc = 0
    for v in iter_bits(w):
        acc |= g.adj[v]
    return acc


# ---------------------------------------------------------------------------
# standard families


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: hub is node 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def binary_tree(depth: int) -> Graph:
    """Complete binary tree of the given depth in heap layout; root is node 0."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    n = (1 << (depth + 1)) - 1
    edges = []
    for v in range(n):
        for c in (2 * v + 1, 2 * v + 2):
            if c < n:
                edges.append((v, c))
    return Graph.from_edges(n, edges)


_FAMILIES = {
    "complete": (complete, 1),
    "cycle": (cycle, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "star": (star, 1),
    "binary_tree": (binary_tree, 1),
    "edgeless": (edgeless, 1),
}


def make_family(kind: str, *params: int) -> Graph:
    """Build a canonical labeled instance of a named family."""
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(_FAMILIES)}")
    ctor, arity = _FAMILIES[kind]
    if len(params) != arity:
        raise ValueError(f"family {kind!r} takes {arity} parameter(s)")
    return ctor(*params)


# ---------------------------------------------------------------------------
# derived constructions and structure


def blowup2(g: Graph) -> Graph:
    """Replace every node v by the 2-clique {2v, 2v+1}, joining adjacent cliques."""
    edges = [(2 * v, 2 * v + 1) for v in range(g.n)]
    for u, v in g.edges():
        edges += [(2 * u, 2 * v), (2 * u, 2 * v + 1), (2 * u + 1, 2 * v), (2 * u + 1, 2 * v + 1)]
    return Graph.from_edges(2 * g.n, edges)


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on the kept mask; returns (graph, old ids in new order)."""
    old = nodes_of(keep)
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges() if keep >> u & 1 and keep >> v & 1]
    return Graph.from_edges(len(old), edges), old


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph.from_edges(a.n + b.n, edges)


def connected_components(g: Graph) -> list[int]:
    """Component node masks, ordered by smallest contained node."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grown = adjacent_union(g, frontier) & ~comp
            comp |= grown
            frontier = grown
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_forest(g: Graph) -> bool:
    return all(_component_is_tree(g, comp) for comp in connected_components(g))


def _component_is_tree(g: Graph, comp: int) -> bool:
    nodes = comp.bit_count()
    edges = sum((g.adj[v] & comp).bit_count() for v in iter_bits(comp)) // 2
    return edges == nodes - 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count == g.n - 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; unreachable nodes get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        grown = adjacent_union(g, frontier) & ~seen
        for v in iter_bits(grown):
            dist[v] = d
        seen |= grown
        frontier = grown
    return dist


def diameter(g: Graph) -> int:
    """Largest hop distance within the graph; requires connectivity."""
    if not is_connected(g):
        raise ValueError("diameter of a disconnected graph")
    if g.n == 0:
        return 0
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def bipartition(g: Graph) -> tuple[int, int] | None:
    """2-coloring as (left mask, right mask), or None if not bipartite."""
    color = [-1] * g.n
    for comp in connected_components(g):
        root = (comp & -comp).bit_length() - 1
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for v in iter_bits(g.adj[u]):
                    if color[v] == -1:
                        color[v] = color[u] ^ 1
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return None
            frontier = nxt
    return mask_of(v for v in range(g.n) if color[v] == 0), mask_of(
        v for v in range(g.n) if color[v] == 1
    )


def is_caterpillar_forest(g: Graph) -> bool:
    """True iff every component is a tree that is a path after removing all leaves.

    Components with one or two nodes count as caterpillars (degenerate spine).
    """
    for comp in connected_components(g):
        if comp.bit_count() <= 2:
            if not _component_is_tree(g, comp):
                return False
            continue
        if not _component_is_tree(g, comp):
            return False
        leaves = mask_of(v for v in iter_bits(comp) if (g.adj[v] & comp).bit_count() == 1)
        spine = comp & ~leaves
        # the spine of a tree stays connected, so degree <= 2 makes it a path
        if any((g.adj[v] & spine).bit_count() > 2 for v in iter_bits(spine)):
            return False
    return True


# ---------------------------------------------------------------------------
# serialization: edge-list text and graph6


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line n, then lines "u v" with u < v."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphFormatError("missing node count line", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise GraphFormatError(f"invalid node count {lines[0].strip()!r}", line=1) from None
    if n < 0:
        raise GraphFormatError("node count must be >= 0", line=1)
    edges = []
    for lineno, raw in enumerate(lines[1:], start=2):
        s = raw.strip()
        if not s:
            continue
        parts = s.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {s!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {s!r}", line=lineno) from None
        if not (0 <= u < v < n):
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < {n}", line=lineno)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


_G6_MAX = 62


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (<= 62 nodes, the desk-scale range)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string", line=1)
    first = ord(s[0]) - 63
    if first == 63:
        raise GraphFormatError("graph6 graphs with more than 62 nodes are not supported", offset=0)
    if not 0 <= first <= _G6_MAX:
        raise GraphFormatError(f"invalid graph6 size byte {s[0]!r}", offset=0)
    n = first
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {need} characters, got {len(body)}", offset=1
        )
    bits = []
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", offset=1 + k)
        bits.extend((val >> (5 - b)) & 1 for b in range(6))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (<= 62 nodes)."""
    if g.n > _G6_MAX:
        raise ValueError("graph6 output supported for at most 62 nodes")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6_stream(text: str) -> list[Graph]:
    """Decode one graph per non-empty line."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphFormatError as exc:
            raise GraphFormatError(f"bad graph6 line: {exc}", line=lineno) from exc
    return graphs

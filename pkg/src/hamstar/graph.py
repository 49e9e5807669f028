"""Bitset graphs, degree sums and the graph families the theorem talks about.

A graph on ``n <= 64`` vertices is stored as one integer per vertex whose set
bits are that vertex's neighbours.  Graphs are immutable; every constructor
returns a fresh value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapacityError, GraphArgumentError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphArgumentError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphArgumentError(f"row {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphArgumentError(f"loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphArgumentError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Build without validation; for generators that guarantee symmetry."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphArgumentError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphArgumentError(f"loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
        for v in vertices:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << index[w] for w in bits(self.adj[v]) if w in index))
        return Graph(len(vertices), tuple(rows))

    def _check_vertex(self, v: int):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphArgumentError(f"vertex {v!r} out of range for n={self.n}")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- constructors -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphArgumentError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices 0..a-1."""
    return join(empty_graph(a), empty_graph(b))


def star_graph(t: int) -> Graph:
    """K_{1,t} with the hub at vertex 0."""
    return join(empty_graph(1), empty_graph(t))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    ``g`` keeps labels 0..g.n-1 and ``h`` is shifted up by ``g.n``.
    """
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices, limit is {MAX_VERTICES}")
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    rows = [row | h_mask for row in g.adj]
    rows += [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices, limit is {MAX_VERTICES}")
    return Graph(n, tuple(g.adj) + tuple(row << g.n for row in h.adj))


def sharpness_family(t: int) -> Graph:
    """K_{t-3,t-1}: connected, on the threshold, yet neither traceable nor K_{1,t}-containing."""
    if t < 5:
        raise GraphArgumentError(f"t must be at least 5, got {t}")
    return complete_bipartite(t - 3, t - 1)


def equality_family(h: Graph, t: int) -> Graph:
    """``h`` joined with t-1 independent vertices; ``h`` must have t-3 vertices."""
    if t < 5:
        raise GraphArgumentError(f"t must be at least 5, got {t}")
    if h.n != t - 3:
        raise GraphArgumentError(f"H must have t-3 = {t - 3} vertices, got {h.n}")
    return join(h, empty_graph(t - 1))


# -- predicates and degree sums ----------------------------------------------

def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = frontier = 1
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    mask = 0
    for v in vertices:
        g._check_vertex(v)
        mask |= 1 << v
    return all(not (g.adj[v] & mask) for v in bits(mask))


def sigma_k(g: Graph, k: int) -> Optional[int]:
    """Minimum degree sum over k pairwise nonadjacent vertices.

    Returns ``None`` when ``g`` has no independent set of size ``k``.
    """
    if not (isinstance(k, int) and 1 <= k <= g.n):
        raise GraphArgumentError(f"k must satisfy 1 <= k <= n={g.n}, got {k!r}")
    deg = g.degrees()
    if k == 1:
        return min(deg)
    if k == 2:
        best = None
        for u in range(g.n):
            for v in bits(g.vertex_mask & ~g.adj[u] & ~((2 << u) - 1)):
                s = deg[u] + deg[v]
                if best is None or s < best:
                    best = s
        return best

    # Branch and bound over independent sets, cheapest vertices first.
    order = sorted(range(g.n), key=lambda v: (deg[v], v))
    rank = {v: i for i, v in enumerate(order)}
    # later[i]: vertices ranked after position i, as a mask of original labels
    later = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        later[i] = later[i + 1] | (1 << order[i])
    best = [None]

    def extend(candidates: int, chosen: int, total: int):
        if chosen == k:
            if best[0] is None or total < best[0]:
                best[0] = total
            return
        need = k - chosen
        cand = sorted(bits(candidates), key=rank.__getitem__)
        if len(cand) < need:
            return
        for idx, v in enumerate(cand):
            if len(cand) - idx < need:
                break
            # candidates are in degree order, so the cheapest completion is a prefix
            if best[0] is not None and total + sum(deg[w] for w in cand[idx:idx + need]) >= best[0]:
                break
            extend(candidates & later[rank[v] + 1] & ~g.adj[v], chosen + 1, total + deg[v])

    extend(g.vertex_mask, 0, 0)
    return best[0]


def meets_ore_threshold(g: Graph, t: int, strict: bool = True) -> bool:
    """Whether sigma_2 exceeds (or reaches, if not ``strict``) (t-3)/(t-2) * n.

    Compared by cross-multiplication.  An undefined sigma_2 (complete graph)
    meets the hypothesis vacuously.
    """
    s2 = sigma_k(g, 2) if g.n >= 2 else None
    if s2 is None:
        return True
    lhs, rhs = (t - 2) * s2, (t - 3) * g.n
    return lhs > rhs if strict else lhs >= rhs


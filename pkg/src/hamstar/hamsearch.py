"""Exact longest paths and cycles with witnesses.

Both searches walk vertex sequences in lexicographic order and memoise the
best completion of every (visited set, last vertex) state, so the returned
witness is the lexicographically least optimal sequence.  Cycles are written
starting from their smallest vertex.  Lengths count vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import CapacityError, GraphArgumentError
from .graph import Graph, bits, popcount

SEARCH_CAP = 24

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class VertexSequence:
    vertices: tuple[int, ...]
    kind: str = PATH

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        if self.kind not in (PATH, CYCLE):
            return False
        if any(not (isinstance(v, int) and 0 <= v < g.n) for v in vs):
            return False
        if len(set(vs)) != len(vs):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        if self.kind == CYCLE:
            return len(vs) >= 3 and g.has_edge(vs[-1], vs[0])
        return len(vs) >= 1

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


def _check_size(g: Graph):
    if g.n == 0:
        raise GraphArgumentError("graph has no vertices")
    if g.n > SEARCH_CAP:
        raise CapacityError(f"exact search is capped at {SEARCH_CAP} vertices, got {g.n}")


def _component(adj, allowed: int, start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


class _PathSearch:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.full = g.vertex_mask
        self.memo: dict[int, int] = {}

    def extend(self, visited: int, last: int) -> int:
        """Most vertices that can still be appended after ``last``."""
        key = visited << 6 | last
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        free = self.full & ~visited
        bound = popcount(_component(self.adj, free | 1 << last, last)) - 1
        best = 0
        if bound:
            for w in bits(self.adj[last] & free):
                val = 1 + self.extend(visited | 1 << w, w)
                if val > best:
                    best = val
                    if best == bound:
                        break
        self.memo[key] = best
        return best


class _CycleSearch:
    """Cycles whose smallest vertex is ``root``."""

    def __init__(self, g: Graph, root: int):
        self.adj = g.adj
        self.root = root
        self.allowed = g.vertex_mask & ~((1 << root) - 1)
        self.memo: dict[int, int] = {}

    def closes(self, visited: int, last: int) -> bool:
        return popcount(visited) >= 3 and bool(self.adj[last] >> self.root & 1)

    def best(self, visited: int, last: int) -> int:
        """Longest cycle length reachable from this partial path, 0 if none."""
        key = visited << 6 | last
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        size = popcount(visited)
        free = self.allowed & ~visited
        bound = size + popcount(_component(self.adj, free | 1 << last, last)) - 1
        best = size if self.closes(visited, last) else 0
        if best < bound:
            for w in bits(self.adj[last] & free):
                val = self.best(visited | 1 << w, w)
                if val > best:
                    best = val
                    if best == bound:
                        break
        self.memo[key] = best
        return best


def longest_path(g: Graph) -> tuple[int, VertexSequence]:
    """p(G) and the lexicographically least path attaining it."""
    _check_size(g)
    search = _PathSearch(g)
    length, start = 0, 0
    for s in range(g.n):
        if popcount(_component(g.adj, g.vertex_mask, s)) <= length:
            continue
        val = 1 + search.extend(1 << s, s)
        if val > length:
            length, start = val, s
            if length == g.n:
                break

    seq = [start]
    visited = 1 << start
    while len(seq) < length:
        need = length - len(seq)
        last = seq[-1]
        for w in bits(g.adj[last] & ~visited):
            if 1 + search.extend(visited | 1 << w, w) == need:
                seq.append(w)
                visited |= 1 << w
                break
        else:  # pragma: no cover - memo is exact, so some branch matches
            raise AssertionError("path reconstruction lost the optimum")
    return length, VertexSequence(tuple(seq), PATH)


def hamiltonian_path(g: Graph) -> Optional[VertexSequence]:
    length, witness = longest_path(g)
    return witness if length == g.n else None


def longest_cycle(g: Graph) -> tuple[int, Optional[VertexSequence]]:
    """c(G) and the lexicographically least longest cycle, or (0, None) if acyclic."""
    _check_size(g)
    length, root, chosen = 0, -1, None
    for s in range(g.n):
        if g.n - s <= length:
            break
        search = _CycleSearch(g, s)
        val = search.best(1 << s, s)
        if val > length:
            length, root, chosen = val, s, search
            if length == g.n:
                break
    if chosen is None:
        return 0, None
    return length, VertexSequence(_rebuild_cycle(chosen, length), CYCLE)


def _rebuild_cycle(search: _CycleSearch, length: int) -> tuple[int, ...]:
    seq = [search.root]
    visited = 1 << search.root
    while not (len(seq) == length and search.closes(visited, seq[-1])):
        for w in bits(search.adj[seq[-1]] & search.allowed & ~visited):
            if search.best(visited | 1 << w, w) == length:
                seq.append(w)
                visited |= 1 << w
                break
        else:  # pragma: no cover
            raise AssertionError("cycle reconstruction lost the optimum")
    return tuple(seq)


def hamiltonian_cycle(g: Graph) -> Optional[VertexSequence]:
    _check_size(g)
    if g.n < 3:
        return None
    search = _CycleSearch(g, 0)
    if search.best(1, 0) != g.n:
        return None
    return VertexSequence(_rebuild_cycle(search, g.n), CYCLE)


def has_hamiltonian_cycle(g: Graph) -> bool:
    if g.n < 3:
        raise GraphArgumentError(f"Hamiltonian cycles need n >= 3, got n={g.n}")
    return hamiltonian_cycle(g) is not None

"""Induced stars K_{1,t}: search and certificate checking."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import GraphArgumentError
from .graph import Graph, bits, popcount


@dataclass(frozen=True)
class StarWitness:
    center: int
    leaves: tuple[int, ...]

    def to_json(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}


def _first_independent_set(adj, candidates: int, size: int) -> Optional[list[int]]:
    """Lexicographically least independent ``size``-subset of ``candidates``."""
    if size == 0:
        return []
    if popcount(candidates) < size:
        return None
    for v in bits(candidates):
        rest = candidates & ~adj[v] & ~((2 << v) - 1)
        if popcount(rest) < size - 1:
            # later pivots only see fewer candidates
            candidates &= ~(1 << v)
            if popcount(candidates) < size:
                return None
            continue
        found = _first_independent_set(adj, rest, size - 1)
        if found is not None:
            return [v] + found
        candidates &= ~(1 << v)
        if popcount(candidates) < size:
            return None
    return None


def find_induced_star(g: Graph, t: int) -> Optional[StarWitness]:
    """First induced K_{1,t}: centres in index order, lexicographically least leaves."""
    if t < 1:
        raise GraphArgumentError(f"t must be positive, got {t}")
    for c in range(g.n):
        nbhd = g.adj[c]
        if popcount(nbhd) < t:
            continue
        leaves = _first_independent_set(g.adj, nbhd, t)
        if leaves is not None:
            return StarWitness(c, tuple(leaves))
    return None


def verify_star_witness(g: Graph, w: StarWitness, t: int) -> bool:
    for v in (w.center, *w.leaves):
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphArgumentError(f"vertex {v!r} out of range for n={g.n}")
    leaves = set(w.leaves)
    if len(leaves) != len(w.leaves) or len(leaves) != t or w.center in leaves:
        return False
    if any(not g.has_edge(w.center, x) for x in leaves):
        return False
    return all(not g.has_edge(x, y) for x in leaves for y in leaves if x < y)

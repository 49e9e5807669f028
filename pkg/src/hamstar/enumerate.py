"""Isomorphism-free generation of small graphs by canonical augmentation.

Graphs on k+1 vertices are grown from graphs on k vertices by adding one
vertex joined to a subset S.  Only one S per orbit of the parent's
automorphism group is tried, and a child is kept only when the new vertex is
its canonical deletion vertex: a maximum-degree vertex (a non-cut one, when
generating connected graphs) in the last canonical position among those.
Canonical labels and orbits come from nauty via pynauty.
"""
from __future__ import annotations

from typing import Iterator

import pynauty

from .errors import CapacityError
from .graph import Graph, bits, popcount

ENUMERATION_CAP = 10

# connected graphs / all graphs on n unlabelled vertices (OEIS A001349, A000088)
KNOWN_COUNTS = {
    True: {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571},
    False: {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168},
}


def _nauty_graph(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={v: list(bits(g.adj[v])) for v in range(g.n)})


def _subset_orbit_reps(g: Graph, connected: bool) -> list[int]:
    """One neighbourhood mask per orbit of Aut(g) acting on vertex subsets."""
    masks = range(1 if connected else 0, 1 << g.n)
    if g.n <= 1:
        return list(masks)
    generators = pynauty.autgrp(_nauty_graph(g))[0]
    if not generators:
        return list(masks)
    seen = bytearray(1 << g.n)
    reps = []
    for mask in masks:
        if seen[mask]:
            continue
        reps.append(mask)
        seen[mask] = 1
        stack = [mask]
        while stack:
            cur = stack.pop()
            for perm in generators:
                img = 0
                for v in bits(cur):
                    img |= 1 << perm[v]
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


def _components(adj, allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                reach |= adj[low.bit_length() - 1]
            frontier = reach & allowed & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def _children(g: Graph, connected: bool) -> Iterator[Graph]:
    n = g.n
    adj = g.adj
    pdeg = g.degrees()
    full = g.vertex_mask
    # components of g - x: in the child, x is a cut vertex unless the new
    # vertex reaches every one of them
    split = [_components(adj, full & ~(1 << x)) for x in range(n)] if connected else None
    for mask in _subset_orbit_reps(g, connected):
        dnew = popcount(mask)
        eligible = []
        rejected = False
        for x in range(n):
            d = pdeg[x] + (mask >> x & 1)
            if d < dnew:
                continue
            if connected:
                others = mask & ~(1 << x)
                if not all(c & others for c in split[x]):
                    continue
            if d > dnew:
                rejected = True
                break
            eligible.append(x)
        if rejected:
            continue
        rows = tuple(row | ((mask >> v & 1) << n) for v, row in enumerate(adj)) + (mask,)
        child = Graph.unchecked(n + 1, rows)
        if not eligible or _canonical_is_new(child, eligible):
            yield child


def _canonical_is_new(child: Graph, eligible: list[int]) -> bool:
    new = child.n - 1
    ng = _nauty_graph(child)
    orbits = pynauty.autgrp(ng)[3]
    if all(orbits[x] == orbits[new] for x in eligible):
        return True
    lab = pynauty.canon_label(ng)
    position = {v: i for i, v in enumerate(lab)}
    chosen = max(eligible + [new], key=position.__getitem__)
    return orbits[chosen] == orbits[new]


def generate_graphs(n: int, connected: bool = True) -> Iterator[Graph]:
    """Every graph (connected, by default) on ``n`` vertices, once per isomorphism class."""
    if n > ENUMERATION_CAP:
        raise CapacityError(f"internal enumeration is capped at {ENUMERATION_CAP} vertices")
    if n <= 0:
        return
    level = [Graph(1, (0,))]
    for _ in range(n - 2):
        level = [c for g in level for c in _children(g, connected)]
    if n == 1:
        yield from level
        return
    for g in level:
        yield from _children(g, connected)


def graphs_up_to(n_max: int, connected: bool = True, n_min: int = 1) -> Iterator[Graph]:
    """All graphs with n_min <= n <= n_max vertices, ordered by n."""
    if n_max > ENUMERATION_CAP:
        raise CapacityError(f"internal enumeration is capped at {ENUMERATION_CAP} vertices")
    level: list[Graph] = []
    for n in range(1, n_max + 1):
        if n == 1:
            level = [Graph(1, (0,))]
        elif n < n_max:
            level = [c for g in level for c in _children(g, connected)]
        else:
            if n >= n_min:
                for g in level:
                    yield from _children(g, connected)
            return
        if n >= n_min:
            yield from level

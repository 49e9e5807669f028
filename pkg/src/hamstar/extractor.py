"""Witness extraction for the Ore-type star theorem.

Given a connected graph above the degree-sum threshold that has no
Hamiltonian path, walk the constructive argument: take a longest cycle C
(dominating, one vertex short of a longest path), pick two off-cycle vertices
u and v with v of large degree, collect the indices i where v sees both c_i
and c_{i+2}, then find a cycle vertex c_l adjacent to u and v whose
neighbourhood holds t-4 of the successors c_{j+1}.  The star is centred at c_l
with leaves u, v, c_{l-1}, c_{l+1} and those successors.

Every intermediate fact the argument relies on is checked at runtime.  A
failed check produces a counterexample verdict naming the step instead of an
exception, so a sweep can report it.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .errors import ExtractionFailure, GraphArgumentError, RegimeError, StructureError
from .graph import Graph, bits, is_connected, popcount, sigma_k
from .graph6 import to_graph6
from .hamsearch import CYCLE, VertexSequence, longest_cycle, longest_path
from .stars import StarWitness, verify_star_witness
from .verdict import COUNTEREXAMPLE, HAM_PATH, HYPOTHESIS_NOT_MET, STAR, Verdict

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexSet:
    """Subset of the 1-based cycle positions 1..m."""

    m: int
    members: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= i <= self.m for i in self.members):
            raise GraphArgumentError(f"indices must lie in 1..{self.m}: {self.members}")

    def __contains__(self, i):
        return wrap(i, self.m) in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def wrap(i: int, m: int) -> int:
    """Reduce a cycle position into 1..m, so position 0 is m and m+1 is 1."""
    return (i - 1) % m + 1


def at(cycle: VertexSequence, i: int) -> int:
    """Vertex c_i of the cycle, 1-based with wraparound."""
    return cycle.vertices[wrap(i, len(cycle)) - 1]


@dataclass(frozen=True)
class ExtractionTrace:
    cycle: VertexSequence
    u: int
    v: int
    i_set: IndexSet
    center_l: int
    j_indices: tuple[int, ...]
    witness: StarWitness
    u_candidates_tried: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle.vertices),
            "u": self.u,
            "v": self.v,
            "I": list(self.i_set.members),
            "l": self.center_l,
            "j_indices": list(self.j_indices),
            "witness": self.witness.to_json(),
        }


def _require_cycle(g: Graph, cycle: VertexSequence):
    if cycle.kind != CYCLE or not cycle.is_valid(g):
        raise GraphArgumentError(f"{cycle.vertices} is not a cycle of the graph")


def _cycle_mask(cycle: VertexSequence) -> int:
    mask = 0
    for v in cycle.vertices:
        mask |= 1 << v
    return mask


def check_dominating_cycle(g: Graph, cycle: VertexSequence) -> bool:
    """True iff every vertex off the cycle has all its neighbours on it."""
    _require_cycle(g, cycle)
    on = _cycle_mask(cycle)
    return all(not (g.adj[x] & ~on) for x in bits(g.vertex_mask & ~on))


def compute_I(g: Graph, cycle: VertexSequence, v: int) -> IndexSet:
    """Positions i with v adjacent to both c_i and c_{i+2}."""
    g._check_vertex(v)
    if v in cycle.vertices:
        raise GraphArgumentError(f"vertex {v} lies on the cycle")
    m = len(cycle)
    members = tuple(i for i in range(1, m + 1)
                    if g.has_edge(v, at(cycle, i)) and g.has_edge(v, at(cycle, i + 2)))
    return IndexSet(m, members)


@dataclass(frozen=True)
class ClaimViolation:
    claim: str
    indices: tuple[int, int]
    witnesses: tuple[int, int]


def check_cycle_claims(g: Graph, cycle: VertexSequence) -> list[ClaimViolation]:
    """Check that no two cycle vertices that must stay apart both reach off the cycle.

    Claim "edge": c_i and c_{i+1} never both have off-cycle neighbours.
    Claim "chord": for a chord c_i c_j, c_{i+1} and c_{j+1} never both do.
    ``cycle`` must be a longest cycle; unless it is Hamiltonian, ``g`` must also
    be connected, non-traceable and have sigma_3 >= n.
    """
    _require_cycle(g, cycle)
    m = len(cycle)
    if longest_cycle(g)[0] != m:
        raise RegimeError("the cycle is not a longest cycle")
    if m < g.n:
        s3 = sigma_k(g, 3) if g.n >= 3 else None
        if not is_connected(g) or s3 is None or s3 < g.n or longest_path(g)[0] > g.n - 1:
            raise RegimeError("claims apply to connected non-traceable graphs with sigma_3 >= n")
    return _claim_violations(g, cycle)


def _claim_violations(g: Graph, cycle: VertexSequence) -> list[ClaimViolation]:
    m = len(cycle)
    on = _cycle_mask(cycle)
    # first off-cycle neighbour of each cycle position, or None
    outside = {}
    for i in range(1, m + 1):
        off = g.adj[at(cycle, i)] & ~on
        outside[i] = (off & -off).bit_length() - 1 if off else None

    found = []
    for i in range(1, m + 1):
        j = wrap(i + 1, m)
        if outside[i] is not None and outside[j] is not None:
            found.append(ClaimViolation("edge", (i, j), (outside[i], outside[j])))
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            if wrap(j + 1, m) == i or not g.has_edge(at(cycle, i), at(cycle, j)):
                continue
            a, b = wrap(i + 1, m), wrap(j + 1, m)
            if outside[a] is not None and outside[b] is not None:
                found.append(ClaimViolation("chord", (i, j), (outside[a], outside[b])))
    return found


def _degree_bound_holds(g: Graph, v: int, t: int, strict: bool) -> bool:
    lhs, rhs = 2 * (t - 2) * g.degree(v), (t - 3) * g.n
    return lhs > rhs if strict else lhs >= rhs


def _off_cycle(g: Graph, cycle: VertexSequence) -> list[int]:
    return list(bits(g.vertex_mask & ~_cycle_mask(cycle)))


def _choose_v(g: Graph, off: list[int]) -> int:
    return max(off, key=lambda x: (g.degree(x), -x))


def _u_candidates(g: Graph, cycle: VertexSequence, v: int, off: list[int]) -> list[int]:
    """Other off-cycle vertices, those sharing a cycle neighbour with v first."""
    on = _cycle_mask(cycle)
    others = [x for x in off if x != v]
    sharing = [x for x in others if g.adj[x] & g.adj[v] & on]
    return sharing + [x for x in others if x not in sharing]


def select_uv(g: Graph, cycle: VertexSequence, t: int) -> tuple[int, int]:
    """v: highest-degree off-cycle vertex (lowest index on ties); u: a partner for it."""
    _require_cycle(g, cycle)
    off = _off_cycle(g, cycle)
    if len(off) < 2:
        raise StructureError(f"need two vertices off the cycle, found {len(off)}")
    v = _choose_v(g, off)
    return _u_candidates(g, cycle, v, off)[0], v


def find_center_and_indices(g: Graph, cycle: VertexSequence, u: int, v: int,
                            t: int) -> tuple[int, list[int]]:
    """First position l with c_l adjacent to u and v, plus t-4 indices j in I(v)
    whose successors c_{j+1} are neighbours of c_l other than c_{l-1}, c_{l+1}."""
    _require_cycle(g, cycle)
    m = len(cycle)
    common = g.adj[u] & g.adj[v] & _cycle_mask(cycle)
    if not common:
        raise GraphArgumentError(f"u={u} and v={v} share no neighbour on the cycle")
    i_set = compute_I(g, cycle, v)
    need = t - 4
    searched = []
    for l in range(1, m + 1):
        c_l = at(cycle, l)
        if not common >> c_l & 1:
            continue
        exclude = {at(cycle, l - 1), at(cycle, l + 1)}
        js = [j for j in i_set
              if g.has_edge(c_l, at(cycle, j + 1)) and at(cycle, j + 1) not in exclude]
        searched.append((l, len(js)))
        if len(js) >= need:
            return l, js[:need]
    raise ExtractionFailure(
        f"no centre on the cycle has {need} usable successor indices", searched=searched)


def _threshold(g: Graph, t: int, strict: bool) -> tuple[Optional[int], bool]:
    s2 = sigma_k(g, 2) if g.n >= 2 else None
    if s2 is None:
        return None, True
    lhs, rhs = (t - 2) * s2, (t - 3) * g.n
    return s2, (lhs > rhs if strict else lhs >= rhs)


def extract_star(g: Graph, t: int, strict: bool = True) -> Verdict:
    """Certify the theorem on ``g``: a Hamiltonian path, or an induced K_{1,t}
    built step by step from a longest cycle.

    ``strict=False`` accepts sigma_2 equal to the threshold, which the argument
    still covers once n > 2t - 4.
    """
    if t < 5:
        raise GraphArgumentError(f"t must be at least 5, got {t}")
    if not is_connected(g):
        raise GraphArgumentError("graph is not connected")
    p, path = longest_path(g)
    if p == g.n:
        return Verdict(HAM_PATH, path=path)
    s2, met = _threshold(g, t, strict)
    if not met:
        return Verdict(HYPOTHESIS_NOT_MET)

    def fail(step: str) -> Verdict:
        log.warning("extraction failed at %s on %s", step, to_graph6(g))
        return Verdict(COUNTEREXAMPLE, graph6=to_graph6(g), failed_step=step)

    if s2 is None:
        return fail("hypothesis vacuous but no Hamiltonian path")
    s3 = sigma_k(g, 3)
    if s3 is None or s3 < g.n:
        return fail("sigma_3 >= n")

    m, cycle = longest_cycle(g)
    if cycle is None or m != p - 1:
        return fail("longest cycle is one shorter than longest path")
    if not check_dominating_cycle(g, cycle):
        return fail("longest cycle is dominating")
    if _claim_violations(g, cycle):
        return fail("cycle claims")
    off = _off_cycle(g, cycle)
    if len(off) < 2:
        return fail("two vertices off the cycle")

    v = _choose_v(g, off)
    if not _degree_bound_holds(g, v, t, strict):
        return fail("degree of v")
    i_set = compute_I(g, cycle, v)
    if len(i_set) <= t - 3:
        return fail("|I(v)| > t-3")

    tried = []
    for u in _u_candidates(g, cycle, v, off):
        tried.append(u)
        if not g.adj[u] & g.adj[v]:
            continue
        try:
            l, js = find_center_and_indices(g, cycle, u, v, t)
        except ExtractionFailure:
            continue
        if len(tried) > 1:
            log.info("partner u=%d succeeded after trying %s", u, tried[:-1])
        break
    else:
        return fail("centre with t-4 successor indices")

    c_l = at(cycle, l)
    leaves = (u, v, at(cycle, l - 1), at(cycle, l + 1)) + tuple(at(cycle, j + 1) for j in js)
    witness = StarWitness(c_l, leaves)
    if not verify_star_witness(g, witness, t):
        return fail("assembled star is induced")
    trace = ExtractionTrace(cycle, u, v, i_set, l, tuple(js), witness, tuple(tried))
    return Verdict(STAR, star=witness, trace=trace)

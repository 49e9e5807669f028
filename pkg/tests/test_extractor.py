import json
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hamstar.errors import GraphArgumentError, RegimeError, StructureError
from hamstar.extractor import (IndexSet, at, check_cycle_claims, check_dominating_cycle, compute_I,
                               extract_star, find_center_and_indices, select_uv, wrap)
from hamstar.graph import (Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph,
                           is_connected, join, path_graph, sigma_k)
from hamstar.hamsearch import CYCLE, VertexSequence, longest_cycle, longest_path
from hamstar.stars import verify_star_witness
from hamstar.verdict import COUNTEREXAMPLE, HAM_PATH, HYPOTHESIS_NOT_MET, STAR
from test_graph import graphs

K3_K5 = join(complete_graph(3), empty_graph(5))
K3_K5_CYCLE = VertexSequence((0, 3, 1, 4, 2, 5), CYCLE)


def cycle_with_pendants(m, attach):
    """C_m on 0..m-1 plus one pendant vertex per entry of ``attach``."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + k, a) for k, a in enumerate(attach)]
    return Graph.from_edges(m + len(attach), edges)


def test_wraparound_indexing():
    assert wrap(0, 6) == 6 and wrap(7, 6) == 1 and wrap(6, 6) == 6
    assert at(K3_K5_CYCLE, 0) == 5 and at(K3_K5_CYCLE, 7) == 0
    assert 7 in IndexSet(6, (1,))
    with pytest.raises(GraphArgumentError):
        IndexSet(6, (0,))


def test_check_dominating_cycle():
    assert longest_cycle(K3_K5)[1] == K3_K5_CYCLE
    assert check_dominating_cycle(K3_K5, K3_K5_CYCLE)
    with pytest.raises(GraphArgumentError):
        check_dominating_cycle(path_graph(4), VertexSequence((0, 1, 2, 3), CYCLE))
    g = cycle_with_pendants(6, [0])
    assert check_dominating_cycle(g, VertexSequence(tuple(range(6)), CYCLE))
    # a pendant path of length two is not dominated
    h = Graph.from_edges(8, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (7, 6)])
    assert not check_dominating_cycle(h, VertexSequence(tuple(range(6)), CYCLE))


def test_compute_I():
    assert compute_I(K3_K5, K3_K5_CYCLE, 6) == IndexSet(6, (1, 3, 5))
    g = Graph.from_edges(7, [(i, (i + 1) % 6) for i in range(6)])
    assert compute_I(g, VertexSequence(tuple(range(6)), CYCLE), 6) == IndexSet(6, ())
    wheel = join(cycle_graph(6), empty_graph(1))
    assert compute_I(wheel, VertexSequence(tuple(range(6)), CYCLE), 6) == IndexSet(6, tuple(range(1, 7)))
    with pytest.raises(GraphArgumentError):
        compute_I(K3_K5, K3_K5_CYCLE, 0)


def test_check_cycle_claims():
    assert check_cycle_claims(K3_K5, K3_K5_CYCLE) == []
    k24 = complete_bipartite(2, 4)
    length, cycle = longest_cycle(k24)
    assert length == 4 and set(cycle.vertices) >= {0, 1}
    assert check_cycle_claims(k24, cycle) == []
    assert check_cycle_claims(complete_graph(5), VertexSequence(tuple(range(5)), CYCLE)) == []
    # a 4-cycle inside K_5 is not longest
    with pytest.raises(RegimeError):
        check_cycle_claims(complete_graph(5), VertexSequence((0, 1, 2, 3), CYCLE))
    # C_6 with pendants breaks sigma_3 >= n
    g = cycle_with_pendants(6, [0, 1])
    with pytest.raises(RegimeError):
        check_cycle_claims(g, VertexSequence(tuple(range(6)), CYCLE))


def test_select_uv():
    assert select_uv(K3_K5, K3_K5_CYCLE, 5) == (7, 6)
    g = cycle_with_pendants(6, [0])
    with pytest.raises(StructureError):
        select_uv(g, VertexSequence(tuple(range(6)), CYCLE), 5)
    # pendant 6 on c_1 (degree 1), 7 and 8 both of degree 2: tie goes to 7
    g = Graph.from_edges(9, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (7, 0), (7, 2), (8, 2), (8, 4)])
    u, v = select_uv(g, VertexSequence(tuple(range(6)), CYCLE), 5)
    assert v == 7 and u == 6  # 6 shares c_1 with v, found before 8 only by index
    # 2(t-2) deg(v) > (t-3) n on the worked example: 2*3*3 = 18 > 16
    assert 2 * 3 * K3_K5.degree(6) > 2 * K3_K5.n


def test_find_center_and_indices():
    assert find_center_and_indices(K3_K5, K3_K5_CYCLE, 7, 6, 5) == (1, [3])
    assert find_center_and_indices(K3_K5, K3_K5_CYCLE, 7, 6, 4) == (1, [])
    g = cycle_with_pendants(6, [0, 2])
    with pytest.raises(GraphArgumentError):
        find_center_and_indices(g, VertexSequence(tuple(range(6)), CYCLE), 6, 7, 5)


def test_extract_star_worked_example():
    verdict = extract_star(K3_K5, 5)
    assert verdict.kind == STAR
    trace = verdict.trace
    assert trace.cycle == K3_K5_CYCLE
    assert (trace.u, trace.v) == (7, 6)
    assert trace.i_set.members == (1, 3, 5)
    assert (trace.center_l, trace.j_indices) == (1, (3,))
    assert verdict.star.center == 0
    assert set(verdict.star.leaves) == {3, 4, 5, 6, 7}
    assert verify_star_witness(K3_K5, verdict.star, 5)
    doc = trace.to_json()
    assert json.loads(json.dumps(doc)) == {
        "cycle": [0, 3, 1, 4, 2, 5], "u": 7, "v": 6, "I": [1, 3, 5], "l": 1,
        "j_indices": [3], "witness": {"center": 0, "leaves": [7, 6, 5, 3, 4]}}


def test_extract_star_other_outcomes():
    assert extract_star(path_graph(8), 5).kind == HAM_PATH
    assert extract_star(complete_bipartite(2, 4), 5).kind == HYPOTHESIS_NOT_MET
    assert extract_star(complete_graph(6), 5).kind == HAM_PATH
    with pytest.raises(GraphArgumentError):
        extract_star(join(complete_graph(3), empty_graph(5)), 4)
    with pytest.raises(GraphArgumentError):
        extract_star(empty_graph(3), 5)


def assert_trace_consistent(g, verdict, t):
    """The leaves follow the construction and every required (non-)edge holds."""
    trace = verdict.trace
    cyc, l = trace.cycle, trace.center_l
    c_l = at(cyc, l)
    succ = [at(cyc, j + 1) for j in trace.j_indices]
    leaves = (trace.u, trace.v, at(cyc, l - 1), at(cyc, l + 1), *succ)
    assert verdict.star.center == c_l and verdict.star.leaves == leaves
    assert verify_star_witness(g, verdict.star, t)
    assert len(trace.i_set) >= t - 2
    assert all(j in trace.i_set for j in trace.j_indices)
    assert trace.u not in cyc.vertices and trace.v not in cyc.vertices and trace.u != trace.v
    for x in leaves:
        assert g.has_edge(c_l, x)
    for a, b in combinations(leaves, 2):
        assert not g.has_edge(a, b)


@pytest.mark.parametrize("m, extra, t", [(3, 2, 5), (4, 2, 5), (5, 2, 5), (4, 2, 6), (5, 3, 6), (5, 2, 7)])
def test_extract_on_join_families(m, extra, t):
    g = join(complete_graph(m), empty_graph(m + extra))
    assert (t - 2) * sigma_k(g, 2) > (t - 3) * g.n
    assert longest_path(g)[0] < g.n
    verdict = extract_star(g, t)
    assert verdict.kind == STAR
    assert_trace_consistent(g, verdict, t)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5).flatmap(lambda m: graphs(min_n=m, max_n=m)))
def test_extract_regardless_of_clique_side(h):
    g = join(h, empty_graph(h.n + 2))
    verdict = extract_star(g, 5)
    assert verdict.kind == STAR
    assert_trace_consistent(g, verdict, 5)


def test_every_nontraceable_hypothesis_graph_yields_star(connected_le8):
    hits = 0
    for g in connected_le8:
        if g.n < 2:
            continue
        verdict = extract_star(g, 5)
        assert verdict.kind != COUNTEREXAMPLE, verdict
        if verdict.kind == STAR:
            assert_trace_consistent(g, verdict, 5)
            hits += 1
    assert hits == 4


def test_relaxed_threshold_beyond_equality_size():
    # K_4 v K_6-bar, t = 6: n = 10 > 2t-4 = 8, sigma_2 = 8 >= (3/4)*10 only non-strictly? 4*8 = 32 > 30
    g = join(complete_graph(4), empty_graph(6))
    assert extract_star(g, 6, strict=False).kind == STAR
    # on the sharpness graph itself the relaxed pipeline cannot produce a star
    k24 = complete_bipartite(2, 4)
    assert extract_star(k24, 5, strict=False).kind == COUNTEREXAMPLE


def test_deterministic():
    g = join(complete_graph(4), empty_graph(6))
    first = extract_star(g, 5)
    for _ in range(3):
        again = extract_star(g, 5)
        assert again == first and again.trace.to_json() == first.trace.to_json()


def test_is_connected_precondition():
    assert is_connected(K3_K5)

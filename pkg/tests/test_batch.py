import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hamstar.batch import connected_mask, decode_block, screen, sigma2_values
from hamstar.errors import Graph6Error
from hamstar.graph import is_connected, meets_ore_threshold, sigma_k
from hamstar.graph6 import parse_graph6, to_graph6
from oracles import random_graph


def scalar(g, t, strict):
    if not is_connected(g):
        return g.n, "disconnected", None
    if not meets_ore_threshold(g, t, strict):
        return g.n, "below", None
    return g.n, "candidate", g


def test_screen_matches_scalar_path(graphs_le7):
    lines = [to_graph6(g) for g in graphs_le7]
    for t in (5, 6):
        for strict in (True, False):
            assert list(screen(lines, t, strict)) == [scalar(g, t, strict) for g in graphs_le7]


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([0.2, 0.5, 0.8]))
def test_screen_random_mixed_sizes(seed, p):
    rng = random.Random(seed)
    graphs = [random_graph(rng, rng.randint(1, 20), p) for _ in range(30)]
    lines = [to_graph6(g) + "\n" for g in graphs]
    assert list(screen(lines, 5, True)) == [scalar(g, 5, True) for g in graphs]
    assert list(screen([s.encode() for s in lines], 6, False)) == [scalar(g, 6, False) for g in graphs]


def test_vector_kernels(graphs_le7):
    six = [g for g in graphs_le7 if g.n == 6]
    block = np.frombuffer("".join(to_graph6(g) for g in six).encode(), dtype=np.uint8).reshape(len(six), -1)
    adj = decode_block(block, 6)
    assert connected_mask(adj).tolist() == [is_connected(g) for g in six]
    assert sigma2_values(adj).tolist() == [-1 if sigma_k(g, 2) is None else sigma_k(g, 2) for g in six]
    for g, a in zip(six, adj):
        assert parse_graph6(to_graph6(g)).adj == tuple(int(sum(int(b) << j for j, b in enumerate(row))) for row in a)


def test_decode_block_rejects_bad_lines():
    block = np.frombuffer(b"D?{D?|", dtype=np.uint8).reshape(2, 3)
    assert decode_block(block, 5) is None


def test_screen_errors_carry_line_numbers():
    with pytest.raises(Graph6Error) as info:
        list(screen(["D?{", "", "D?|"], 5, True))
    assert info.value.line == 3 and info.value.offset == 2
    with pytest.raises(Graph6Error) as info:
        list(screen(["D?{", "Dé{"], 5, True))
    assert info.value.line == 2


def test_screen_accepts_header():
    assert list(screen([">>graph6<<E]r?"], 5, False)) == [scalar(parse_graph6("E]r?"), 5, False)]

import pytest
from hypothesis import given, settings

from hamstar.errors import GraphArgumentError
from hamstar.graph import complete_bipartite, complete_graph, empty_graph, join, star_graph
from hamstar.stars import StarWitness, find_induced_star, verify_star_witness
from oracles import brute_has_star
from test_graph import graphs

K3_K5 = join(complete_graph(3), empty_graph(5))


def test_examples():
    assert find_induced_star(star_graph(5), 5) == StarWitness(0, (1, 2, 3, 4, 5))
    assert find_induced_star(complete_bipartite(2, 4), 5) is None
    w = find_induced_star(K3_K5, 5)
    assert w.center in (0, 1, 2)
    assert set(w.leaves) == {3, 4, 5, 6, 7}


def test_verify_examples():
    assert verify_star_witness(star_graph(5), StarWitness(0, (1, 2, 3, 4, 5)), 5)
    # one leaf swapped for a clique vertex: two leaves adjacent
    assert not verify_star_witness(K3_K5, StarWitness(0, (1, 4, 5, 6, 7)), 5)
    # a leaf that is not a neighbour of the centre
    assert not verify_star_witness(complete_bipartite(2, 4), StarWitness(2, (0, 1, 3)), 3)
    assert not verify_star_witness(star_graph(5), StarWitness(0, (1, 2, 3, 4)), 5)
    assert not verify_star_witness(star_graph(5), StarWitness(0, (1, 1, 2, 3, 4)), 5)
    with pytest.raises(GraphArgumentError):
        verify_star_witness(star_graph(3), StarWitness(0, (1, 2, 9)), 3)


def test_exhaustive_against_brute_force(graphs_le7):
    for g in graphs_le7:
        for t in range(1, 6):
            w = find_induced_star(g, t)
            assert (w is not None) == brute_has_star(g, t), (g, t)
            if w is not None:
                assert verify_star_witness(g, w, t)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_smaller_stars_follow(g):
    for t in range(5, 0, -1):
        w = find_induced_star(g, t)
        if w is not None:
            for s in range(1, t + 1):
                assert verify_star_witness(g, StarWitness(w.center, w.leaves[:s]), s)
                assert find_induced_star(g, s) is not None
            break


def test_leaves_are_lexicographically_least():
    g = join(empty_graph(1), join(empty_graph(2), empty_graph(3)))
    # hub 0; among its neighbours {1,2} and {3,4,5} form the two sides
    assert find_induced_star(g, 3) == StarWitness(0, (3, 4, 5))
    assert find_induced_star(g, 2) == StarWitness(0, (1, 2))

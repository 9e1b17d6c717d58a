import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partialcol.errors import InputError
from partialcol.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    find_clique,
    max_clique,
    path_graph,
    star_graph,
)
from partialcol.patterns import BULL

from reference import clique_number_naive


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# -- examples -------------------------------------------------------------------


def test_neighbors_examples():
    assert complete_graph(3).neighbors(0) == {1, 2}
    assert empty_graph(3).neighbors(1) == frozenset()
    assert path_graph(4).neighbors(1) == {0, 2}


def test_neighbors_out_of_range():
    with pytest.raises(InputError):
        path_graph(3).neighbors(3)


def test_induced_subgraph_examples():
    sub, mapping = complete_graph(4).induced_subgraph({0, 1})
    assert sub == complete_graph(2)
    assert mapping == {0: 0, 1: 1}
    c5 = cycle_graph(5)
    sub, _ = c5.induced_subgraph({1, 2, 3})
    assert sub == path_graph(3)
    same, mapping = c5.induced_subgraph(range(5))
    assert same == c5 and mapping == {v: v for v in range(5)}


def test_connected_components_examples():
    g = disjoint_union(complete_graph(3), empty_graph(1))
    assert g.connected_components() == [(0, 1, 2), (3,)]
    assert empty_graph(4).connected_components() == [(0,), (1,), (2,), (3,)]
    assert path_graph(5).connected_components() == [(0, 1, 2, 3, 4)]


def test_complete_between_examples():
    assert complete_graph(4).is_complete_between({0}, {1, 2, 3})
    assert empty_graph(5).is_anticomplete_between({0, 1}, {3, 4})
    p3 = path_graph(3)
    assert not p3.is_complete_between({0}, {2})
    assert p3.is_anticomplete_between({0}, {2})


def test_complete_between_rejects_overlap():
    with pytest.raises(InputError):
        path_graph(3).is_complete_between({0, 1}, {1})


def test_clique_number_examples():
    assert complete_graph(5).clique_number() == 5
    assert cycle_graph(7).clique_number() == 2
    assert BULL.graph.clique_number() == 3
    with pytest.raises(InputError):
        empty_graph(0).clique_number()


def test_is_independent_examples():
    assert complete_graph(3).is_independent(set())
    assert not complete_graph(3).is_independent({0, 1})
    assert cycle_graph(6).is_independent({0, 2, 4})


def test_constructor_rejects_bad_edges():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_small_families():
    assert star_graph(5).degree(0) == 5
    assert complement(complete_graph(4)) == empty_graph(4)
    assert cycle_graph(6).m == 6


# -- invariants -----------------------------------------------------------------


def test_clique_number_matches_exhaustive_enumeration():
    rng = np.random.default_rng(11)
    for _ in range(150):
        n = int(rng.integers(1, 13))
        g = random_graph(rng, n, float(rng.choice([0.2, 0.5, 0.8])))
        assert g.clique_number() == clique_number_naive(g)


def test_find_clique_is_a_clique_of_requested_size():
    rng = np.random.default_rng(5)
    for _ in range(60):
        g = random_graph(rng, 10, 0.5)
        w = len(max_clique(g))
        k = find_clique(g, w)
        assert k is not None and len(k) == w
        assert all(g.adjacent(a, b) for i, a in enumerate(k) for b in k[i + 1:])
        assert find_clique(g, w + 1) is None


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_induced_subgraph_of_everything_is_identity(g):
    sub, mapping = g.induced_subgraph(range(g.n))
    assert all(sub.adjacent(mapping[u], mapping[v]) == g.adjacent(u, v) for u in range(g.n) for v in range(g.n) if u != v)


@settings(max_examples=80, deadline=None)
@given(graphs(), st.data())
def test_complete_and_anticomplete_only_for_empty_side(g, data):
    side = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    x = {v for v in range(g.n) if side[v] == 0}
    y = {v for v in range(g.n) if side[v] == 1}
    if g.is_complete_between(x, y) and g.is_anticomplete_between(x, y):
        assert not x or not y


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_components_form_a_partition(g):
    comps = g.connected_components()
    seen = [v for c in comps for v in c]
    assert sorted(seen) == list(range(g.n))
    for c in comps:
        sub, _ = g.induced_subgraph(c)
        assert sub.is_connected()
    for i, a in enumerate(comps):
        for b in comps[i + 1:]:
            assert g.is_anticomplete_between(a, b)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partialcol.errors import InputError
from partialcol.graph import Graph, complete_graph, cycle_graph, disjoint_union, path_graph, star_graph
from partialcol.gyarfas import (
    extend_maximal,
    first_noncentral_vertex,
    gyarfas_path,
    is_induced_path,
    max_component_outside,
    recursion_path,
)


def random_connected(rng, n, p):
    while True:
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if g.is_connected():
            return g


def test_star_from_center():
    g = star_graph(5)
    assert gyarfas_path(g, 0) == [0]
    assert max_component_outside(g, [0]) == 0


def test_p9_from_endpoint():
    g = path_graph(9)
    p = gyarfas_path(g, 0)
    assert p[0] == 0 and is_induced_path(g, p)
    assert max_component_outside(g, p) <= 9 // 2


@pytest.mark.parametrize("v", range(8))
def test_c8_from_every_vertex(v):
    g = cycle_graph(8)
    p = gyarfas_path(g, v)
    assert p[0] == v
    assert max_component_outside(g, p) <= 4


def test_extend_examples():
    p5 = path_graph(5)
    assert extend_maximal(p5, [1, 2, 3]) == [0, 1, 2, 3, 4]
    assert extend_maximal(p5, [0, 1, 2, 3, 4]) == [0, 1, 2, 3, 4]
    assert extend_maximal(complete_graph(3), [0, 1]) == [0, 1]


def test_disconnected_rejected():
    with pytest.raises(InputError):
        gyarfas_path(disjoint_union(path_graph(2), path_graph(2)), 0)


def test_recursion_path_leaves_twin_edge():
    # Triangle 0-1-2 with pendant 3 on vertex 2: from vertex 0 the plain
    # construction stops at an edge whose ends have the same closed neighborhood.
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    p = recursion_path(g, 0)
    assert len(p) >= 3 and is_induced_path(g, p) and extend_maximal(g, p) == p
    assert max_component_outside(g, p) <= 2
    assert first_noncentral_vertex(complete_graph(4)) is None


def test_bound_on_random_connected_graphs():
    rng = np.random.default_rng(17)
    for _ in range(150):
        n = int(rng.integers(2, 31))
        g = random_connected(rng, n, float(rng.choice([0.08, 0.15, 0.3, 0.6])))
        v = int(rng.integers(n))
        p = gyarfas_path(g, v)
        assert p[0] == v and is_induced_path(g, p)
        assert max_component_outside(g, p) <= n // 2
        q = extend_maximal(g, p)
        assert is_induced_path(g, q)
        assert max_component_outside(g, q) <= n // 2


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 14), st.integers(0, 2**32 - 1))
def test_extend_is_idempotent(n, seed):
    rng = np.random.default_rng(seed)
    g = random_connected(rng, n, 0.3)
    q = extend_maximal(g, gyarfas_path(g, 0))
    assert extend_maximal(g, q) == q

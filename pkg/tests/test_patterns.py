import numpy as np

from partialcol.graph import Graph, complete_graph, cycle_graph
from partialcol.patterns import BULL, CHAIR, E, class_membership, find_induced, is_induced_embedding

from reference import induced_naive


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_pattern_shapes():
    assert (BULL.graph.n, BULL.graph.m) == (5, 5)
    assert (CHAIR.graph.n, CHAIR.graph.m) == (5, 4)
    assert (E.graph.n, E.graph.m) == (6, 5)
    assert sorted(CHAIR.graph.degree(v) for v in range(5)) == [1, 1, 1, 2, 3]
    assert sorted(BULL.graph.degree(v) for v in range(5)) == [1, 1, 2, 3, 3]


def test_find_induced_examples():
    emb = find_induced(BULL.graph, BULL)
    assert emb is not None and is_induced_embedding(BULL.graph, BULL, emb)
    assert find_induced(cycle_graph(7), BULL) is None
    assert find_induced(E.graph, CHAIR) is not None


def test_class_membership_examples():
    m = class_membership(cycle_graph(8))
    assert m.bull_free and m.chair_free and m.e_free and not m.witnesses
    m = class_membership(E.graph)
    assert m.bull_free and not m.e_free and not m.chair_free
    m = class_membership(complete_graph(6))
    assert m.bull_free and m.chair_free and m.e_free


def test_first_embedding_is_deterministic():
    g = cycle_graph(5)
    g = Graph(7, g.edges() + [(0, 5), (1, 6)])
    assert find_induced(g, BULL) == find_induced(g, BULL)


def test_matcher_agrees_with_naive_enumeration():
    rng = np.random.default_rng(2024)
    for _ in range(120):
        n = int(rng.integers(5, 10))
        g = random_graph(rng, n, float(rng.choice([0.25, 0.4, 0.6])))
        for p in (BULL, CHAIR, E):
            emb = find_induced(g, p)
            assert (emb is not None) == induced_naive(g, p.graph)
            if emb is not None:
                assert is_induced_embedding(g, p, emb)


def test_e_witness_minus_path_end_is_a_chair():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 40:
        g = random_graph(rng, 9, 0.3)
        emb = find_induced(g, E)
        if emb is None:
            continue
        # E vertices 0..4 form the path, 5 hangs off vertex 2; drop the end at 0
        keep = [emb[x] for x in (1, 2, 3, 4, 5)]
        sub, _ = g.induced_subgraph(keep)
        assert find_induced(sub, CHAIR) is not None
        checked += 1

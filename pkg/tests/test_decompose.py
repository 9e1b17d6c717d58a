import pytest

from partialcol.errors import ClassViolation, InputError
from partialcol.graph import Graph, cycle_graph, path_graph
from partialcol.decompose import (
    FatDecomposition,
    NQKind,
    build_decomposition,
    chair_component_dominators,
    classify_nq,
    close_to_cycle,
    path_neighborhood_dominators,
    validate_decomposition,
)
from partialcol.patterns import class_membership
from partialcol.gyarfas import extend_maximal
from partialcol.workbench.generators import GenSpec, fat_layout


def with_vertex(g: Graph, nbrs) -> Graph:
    return Graph(g.n + 1, g.edges() + [(v, g.n) for v in nbrs])


def test_close_to_cycle_examples():
    c8 = cycle_graph(8)
    q, kind = close_to_cycle(c8, list(range(7)))
    assert kind == "cycle" and q == list(range(8))
    p7 = path_graph(7)
    assert close_to_cycle(p7, list(range(7))) == (list(range(7)), "path")
    g = with_vertex(p7, [0, 6, 3])
    assert close_to_cycle(g, list(range(7)))[1] == "path"
    with pytest.raises(InputError):
        close_to_cycle(path_graph(6), list(range(6)))


def test_classify_examples():
    p7 = path_graph(7)
    q = list(range(7))
    cls = classify_nq(with_vertex(p7, [1, 2, 3]), q, "path")[7]
    assert cls.kind is NQKind.TRIPLE and cls.index == 2  # center v3, 0-based
    assert classify_nq(with_vertex(p7, [1]), q, "path")[7].kind is NQKind.END_FIRST
    with pytest.raises(ClassViolation) as info:
        classify_nq(with_vertex(p7, [0, 2, 4]), q, "path")
    assert info.value.vertex == 7
    assert not class_membership(with_vertex(p7, [0, 2, 4])).in_bull_e_class


def test_build_examples():
    dec = build_decomposition(cycle_graph(8), list(range(7)))
    assert dec.kind == "cycle" and dec.order == 8
    assert all(len(p) == 1 for p in dec.parts) and not dec.separator and not dec.remainder
    dec = build_decomposition(path_graph(7), list(range(7)))
    assert dec.kind == "path" and dec.order == 7 and not dec.separator and not dec.remainder


def test_c8_with_dominating_vertex_and_pendant():
    g = with_vertex(cycle_graph(8), range(8))  # d = 8
    g = with_vertex(g, [8])  # t = 9
    assert class_membership(g).in_bull_e_class
    dec = build_decomposition(g, list(range(7)))
    assert dec.kind == "cycle" and [sorted(p) for p in dec.parts] == [[v] for v in range(8)]
    assert dec.separator == {8} and dec.remainder == {9}
    assert validate_decomposition(g, dec) == []
    assert chair_component_dominators(g, dec) == {(9,): 8}


def test_remainder_edge_violation():
    g = path_graph(7)
    g = Graph(8, g.edges() + [(6, 7)])
    dec = FatDecomposition("path", tuple(frozenset({v}) for v in range(7)), frozenset(), frozenset({7}))
    problems = validate_decomposition(g, dec)
    assert [p.check for p in problems] == ["separates"]
    assert problems[0].witness == (6, 7)


def test_empty_part_violation():
    g = path_graph(6)
    dec = FatDecomposition("path", tuple(frozenset({v}) for v in range(6)) + (frozenset(),), frozenset(), frozenset())
    checks = {p.check for p in validate_decomposition(g, dec)}
    assert "nonempty_parts" in checks


def test_dominator_examples():
    dec = build_decomposition(cycle_graph(8), list(range(7)))
    assert chair_component_dominators(cycle_graph(8), dec) == {}
    p5 = path_graph(5)
    assert path_neighborhood_dominators(p5, list(range(5))) == {}
    g = with_vertex(path_graph(3), [0, 1, 2])  # d = 3
    g = with_vertex(g, [3])  # u = 4
    assert path_neighborhood_dominators(g, [0, 1, 2]) == {(4,): 3}
    assert g.is_complete_between({3}, {4})


def test_pair_component_dominated():
    g = with_vertex(cycle_graph(8), range(8))  # d = 8
    g = Graph(11, g.edges() + [(8, 9), (8, 10), (9, 10)])
    dec = build_decomposition(g, list(range(7)))
    assert chair_component_dominators(g, dec) == {(9, 10): 8}


def certified_layouts(count, seed0=0):
    """Fat layouts that are (bull, E)-free and connected, with a maximal core path."""
    found = 0
    seed = seed0
    while found < count:
        seed += 1
        family = "fat-cycle" if seed % 2 else "fat-path"
        spec = GenSpec(family=family, order=8 + seed % 3 if family == "fat-cycle" else 7 + seed % 3,
                       max_part=2, separator=seed % 3, remainder=(seed // 3) % 4, seed=seed, p=0.4)
        lay = fat_layout(spec)
        g = lay.graph
        if not g.is_connected() or not class_membership(g).in_bull_e_class:
            continue
        path = lay.core[:-1] if family == "fat-cycle" else lay.core
        if extend_maximal(g, path) != path:
            continue
        found += 1
        yield lay, path


def test_generated_fat_structures_decompose():
    for lay, path in certified_layouts(40):
        g = lay.graph
        dec = build_decomposition(g, path)
        assert validate_decomposition(g, dec) == []
        assert dec.order == len(lay.parts)
        assert sorted(map(sorted, dec.parts)) == sorted(map(sorted, lay.parts))
        assert dec.separator == set(lay.separator)
        assert dec.remainder == set(lay.remainder)

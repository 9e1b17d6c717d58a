import numpy as np
import pytest

from partialcol.errors import StructureViolation
from partialcol.fatdp import opt_tables, solve_fat, subset_order
from partialcol.graph import Graph, cycle_graph, path_graph
from partialcol.instance import Instance
from partialcol.oracle import brute_force
from partialcol.workbench.generators import GenSpec, fat_layout, gen_revenue


def fat_instance(seed, kind, r, k):
    spec = GenSpec(family=f"fat-{kind}", order=r, max_part=2, seed=seed, p=0.5)
    lay = fat_layout(spec)
    rev = gen_revenue(lay.graph.n, k, 9, 0.3, [seed, 1])
    return Instance(lay.graph, k, rev), [frozenset(p) for p in lay.parts]


def test_subset_order():
    assert subset_order(2) == [0, 1, 2, 3]
    assert subset_order(3) == [0, 1, 2, 4, 3, 5, 6, 7]


def test_examples():
    p7 = Instance.unit(path_graph(7), 1)
    assert solve_fat(p7, [[v] for v in range(7)], "path", brute_force).value == 4
    c8 = Instance.unit(cycle_graph(8), 2)
    assert solve_fat(c8, [[v] for v in range(8)], "cycle", brute_force).value == 8


def test_odd_fat_cycle_needs_three_colors():
    c9 = Instance.unit(cycle_graph(9), 2)
    assert solve_fat(c9, [[v] for v in range(9)], "cycle", brute_force).value == 8


def test_structure_check():
    g = Graph(7, path_graph(7).edges() + [(0, 2)])
    with pytest.raises(StructureViolation):
        solve_fat(Instance.unit(g, 1), [[v] for v in range(7)], "path", brute_force, check=True)


@pytest.mark.parametrize("kind", ["path", "cycle"])
def test_agrees_with_oracle(kind):
    rng = np.random.default_rng(4 if kind == "path" else 5)
    for t in range(30):
        r = int(rng.integers(3, 7))
        k = int(rng.integers(1, 4))
        inst, parts = fat_instance(1000 * t + r, kind, r, k)
        sol = solve_fat(inst, parts, kind, brute_force, check=True)
        assert sol.value == brute_force(inst).value


def test_tables_are_monotone():
    inst, parts = fat_instance(7, "path", 5, 3)
    tables = opt_tables(inst, [sum(1 << v for v in p) for p in parts], brute_force)
    for row in tables.best:
        for b in range(8):
            for sub in range(8):
                if sub & ~b == 0:
                    assert row[sub] <= row[b]


def test_cycle_at_most_linearized_path():
    for seed in range(20):
        inst, parts = fat_instance(seed, "cycle", 6, 2)
        cyc = solve_fat(inst, parts, "cycle", brute_force).value
        first, last = parts[0], parts[-1]
        g = Graph(inst.n, [(u, v) for u, v in inst.graph.edges() if not ({u, v} & first and {u, v} & last)])
        path = solve_fat(Instance(g, inst.k, inst.rev), parts, "path", brute_force).value
        assert cyc <= path

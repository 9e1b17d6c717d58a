from fractions import Fraction

import numpy as np
import pytest

from partialcol.errors import ResourceLimitError
from partialcol.graph import Graph, complete_graph, cycle_graph, empty_graph
from partialcol.instance import Instance, value
from partialcol.oracle import brute_force

from reference import mwis, partial_coloring_by_subsets

FROZEN_SEED = 99
# Computed once with reference.partial_coloring_by_subsets for default_rng(12345).
FROZEN = [25, 12, 16, 42, 17, 27, 23, 15]


def _random_instance(rng, n, k, zero=0.3):
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45])
    rev = rng.integers(0, 10, size=(n, k))
    rev[rng.random(size=(n, k)) < zero] = 0
    return Instance(g, k, tuple(tuple(int(x) for x in row) for row in rev))


def test_examples():
    assert brute_force(Instance.unit(empty_graph(0), 1)).value == 0
    one = brute_force(Instance(empty_graph(1), 2, ((5, 7),)))
    assert one.value == 7 and one.coloring == {0: 1}
    assert brute_force(Instance.unit(complete_graph(3), 2)).value == 2


def test_safety_limit():
    with pytest.raises(ResourceLimitError):
        brute_force(Instance.unit(empty_graph(17), 1))
    assert brute_force(Instance.unit(empty_graph(17), 1), limit=17).value == 17


def test_agrees_with_subset_enumeration():
    rng = np.random.default_rng(FROZEN_SEED)
    for _ in range(80):
        inst = _random_instance(rng, int(rng.integers(1, 8)), int(rng.integers(1, 4)))
        sol = brute_force(inst)
        assert value(inst, sol) == sol.value
        assert sol.value == partial_coloring_by_subsets(inst.graph, inst.k, inst.rev)


def test_frozen_values():
    rng = np.random.default_rng(12345)
    got = [brute_force(_random_instance(rng, 7, 2)).value for _ in range(8)]
    assert got == FROZEN


def test_single_color_is_max_weight_independent_set():
    rng = np.random.default_rng(3)
    for _ in range(60):
        inst = _random_instance(rng, int(rng.integers(1, 10)), 1, zero=0.2)
        assert brute_force(inst).value == mwis(inst.graph, [row[0] for row in inst.rev])


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_odd_cycles_with_two_colors(m):
    n = 2 * m + 1
    assert brute_force(Instance.unit(cycle_graph(n), 2)).value == 2 * m


def test_rational_revenues():
    inst = Instance(empty_graph(2), 1, ((Fraction(1, 2),), (Fraction(1, 3),)))
    assert brute_force(inst).value == Fraction(5, 6)

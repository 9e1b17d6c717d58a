"""
Reproducible instance generators.

All randomness flows through :func:`numpy.random.default_rng` seeded from
the spec, so every graph and revenue table is a pure function of its
parameters.  Class-filtered families are certified by the pattern matcher;
when rejection sampling runs out of tries the last sample is *repaired* by
deleting the highest-numbered vertex of each forbidden pattern found until
none is left.  Repair biases the distribution and may shrink the graph,
which is fine for differential testing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..errors import InputError, ResourceLimitError
from ..graph import Graph, complement, complete_graph, cycle_graph, path_graph, star_graph
from ..instance import Instance
from ..patterns import BULL, CHAIR, E, witness_for

FAMILIES = ("random-class", "fat-path", "fat-cycle", "co-bipartite", "named")
NAMED = {
    "bull": lambda n: BULL.graph,
    "chair": lambda n: CHAIR.graph,
    "E": lambda n: E.graph,
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": lambda n: star_graph(n - 1),
}


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance.

    ``order``/``max_part``/``parts`` shape the fat families; ``separator``
    and ``remainder`` add vertices complete to the fat part and vertices
    hanging off the separator.
    """

    family: str = "random-class"
    n: int = 10
    p: float = 0.3
    class_filter: str | None = "E"
    seed: int = 0
    k: int = 2
    max_value: int = 9
    zero_fraction: float = 0.3
    name: str | None = None
    order: int = 7
    max_part: int = 2
    parts: tuple[int, ...] | None = None
    separator: int = 0
    remainder: int = 0
    tries: int = 200

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        if not 0.0 <= self.p <= 1.0 or not 0.0 <= self.zero_fraction <= 1.0:
            raise InputError("probabilities must lie in [0, 1]")
        if self.n < 1 or self.order < 1 or self.max_part < 1:
            raise InputError("sizes must be at least 1")
        if self.class_filter not in (None, "E", "chair"):
            raise InputError(f"class filter must be 'E', 'chair' or None, got {self.class_filter!r}")


def _random_edges(rng: np.random.Generator, verts: list[int], p: float) -> list[tuple[int, int]]:
    out = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if rng.random() < p:
                out.append((verts[a], verts[b]))
    return out


def _gnp(rng: np.random.Generator, n: int, p: float) -> Graph:
    return Graph(n, _random_edges(rng, list(range(n)), p))


@dataclass(frozen=True)
class FatLayout:
    """A generated fat structure together with its intended parts."""

    graph: Graph
    parts: tuple[tuple[int, ...], ...]
    separator: tuple[int, ...]
    remainder: tuple[int, ...]

    @property
    def core(self) -> list[int]:
        """First vertex of every part: an induced path or cycle."""
        return [p[0] for p in self.parts]


def _fat(rng: np.random.Generator, spec: GenSpec, cycle: bool) -> FatLayout:
    if spec.parts is not None:
        sizes = list(spec.parts)
    else:
        sizes = [int(s) for s in rng.integers(1, spec.max_part + 1, size=spec.order)]
    if cycle and len(sizes) < 3:
        raise InputError("a fat cycle needs at least 3 parts")
    edges, parts, nxt = [], [], 0
    for s in sizes:
        part = list(range(nxt, nxt + s))
        nxt += s
        parts.append(part)
        edges += _random_edges(rng, part, spec.p)
    r = len(parts)
    pairs = [(t, t + 1) for t in range(r - 1)] + ([(r - 1, 0)] if cycle else [])
    for a, b in pairs:
        edges += [(u, v) for u in parts[a] for v in parts[b]]
    fat = list(range(nxt))
    sep = list(range(nxt, nxt + spec.separator))
    nxt += spec.separator
    rem = list(range(nxt, nxt + spec.remainder))
    nxt += spec.remainder
    edges += [(d, v) for d in sep for v in fat]
    edges += _random_edges(rng, sep, spec.p)
    edges += _random_edges(rng, rem, spec.p)
    for t in rem:
        if not sep:
            break
        hit = [d for d in sep if rng.random() < 0.5]
        if not hit:
            hit = [sep[int(rng.integers(len(sep)))]]
        edges += [(d, t) for d in hit]
    return FatLayout(Graph(nxt, edges), tuple(tuple(p) for p in parts), tuple(sep), tuple(rem))


def fat_layout(spec: GenSpec) -> FatLayout:
    """Unfiltered fat path/cycle for ``spec``, with its layout."""
    if spec.family not in ("fat-path", "fat-cycle"):
        raise InputError("fat_layout needs a fat-path or fat-cycle spec")
    return _fat(np.random.default_rng(spec.seed), spec, cycle=spec.family == "fat-cycle")


def _co_bipartite(rng: np.random.Generator, n: int, p: float) -> Graph:
    left = n // 2
    edges = [(u, v) for u in range(left) for v in range(left, n) if rng.random() < p]
    return complement(Graph(n, edges))


def _raw(rng: np.random.Generator, spec: GenSpec) -> Graph:
    if spec.family == "random-class":
        return _gnp(rng, spec.n, spec.p)
    if spec.family == "fat-path":
        return _fat(rng, spec, cycle=False).graph
    if spec.family == "fat-cycle":
        return _fat(rng, spec, cycle=True).graph
    if spec.family == "co-bipartite":
        return _co_bipartite(rng, spec.n, spec.p)
    if spec.name not in NAMED:
        raise InputError(f"unknown named graph {spec.name!r}")
    return NAMED[spec.name](spec.n)


def repair(g: Graph, class_filter: str | None) -> Graph:
    """Delete witness vertices (highest id first) until ``g`` is in the class."""
    while True:
        found = witness_for(g, class_filter)
        if found is None:
            return g
        _, emb = found
        drop = max(emb.values())
        g, _ = g.induced_subgraph(v for v in range(g.n) if v != drop)


def gen_graph(spec: GenSpec) -> Graph:
    """Graph described by ``spec``; certified against ``spec.class_filter``.

    Named graphs are returned as-is (they are the patterns themselves).
    """
    rng = np.random.default_rng(spec.seed)
    if spec.family == "named":
        return _raw(rng, spec)
    g = None
    for _ in range(max(1, spec.tries)):
        g = _raw(rng, spec)
        if witness_for(g, spec.class_filter) is None:
            return g
    g = repair(g, spec.class_filter)
    if g.n == 0:
        raise ResourceLimitError("rejection budget exhausted and repair left an empty graph")
    return g


def gen_revenue(
    n: int,
    k: int,
    max_value: int,
    zero_fraction: float,
    seed,
    min_value: int = 0,
) -> tuple[tuple[int, ...], ...]:
    """Integer revenues uniform in ``[min_value, max_value]``, each entry
    independently zeroed with probability ``zero_fraction``."""
    if max_value < 0 or min_value > max_value:
        raise InputError("need 0 <= min_value <= max_value")
    if not 0.0 <= zero_fraction <= 1.0:
        raise InputError("zero_fraction must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    table = rng.integers(min_value, max_value + 1, size=(n, k))
    table[rng.random(size=(n, k)) < zero_fraction] = 0
    return tuple(tuple(int(x) for x in row) for row in table)


def gen_instance(spec: GenSpec) -> Instance:
    g = gen_graph(spec)
    rev = gen_revenue(g.n, spec.k, spec.max_value, spec.zero_fraction, [spec.seed, 1])
    return Instance(g, spec.k, rev)


def with_seed(spec: GenSpec, seed: int) -> GenSpec:
    return replace(spec, seed=seed)

"""
Dynamic program over color subsets for fat paths and fat cycles.

``best[t][B]`` is the optimum on part ``t`` alone using only colors in ``B``
(obtained from the inner solver); ``prefix[t][B]`` is the optimum on parts
``0..t`` when part ``t`` uses only colors in ``B``.  Consecutive parts are
complete to each other, so their color sets must be disjoint:

    prefix[t][B] = best[t][B] + max over B' subset of ([k] - B) of prefix[t-1][B']

For a fat cycle the colors allowed on part 0 are guessed as a set ``B0``;
part 0 may then use only subsets of ``B0`` and the last part is left empty
whenever its set meets ``B0``.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .errors import InputError, StructureViolation
from .graph import Graph, iter_bits, popcount, to_mask
from .instance import EMPTY, Instance, Solution, merge_solutions

Inner = Callable[[Instance], Solution]


def subset_order(k: int) -> list[int]:
    """All color bitsets, by size then numeric value."""
    return sorted(range(1 << k), key=lambda b: (popcount(b), b))


def check_fat_structure(g: Graph, parts: Sequence[int], kind: str) -> None:
    r = len(parts)
    seen = 0
    for m in parts:
        if not m or seen & m:
            raise StructureViolation("parts must be non-empty and disjoint")
        seen |= m
    if seen != g.full_mask:
        raise StructureViolation("parts must cover the graph")
    for a in range(r):
        for b in range(a + 1, r):
            consecutive = b == a + 1 or (kind == "cycle" and a == 0 and b == r - 1)
            want = parts[b] if consecutive else 0
            for u in iter_bits(parts[a]):
                if g.row(u) & parts[b] != want:
                    raise StructureViolation(f"parts {a} and {b} violate the fat {kind} pattern", witness=(u,))


@dataclass
class FatTables:
    """Per-part optima, kept for inspection by tests."""

    best: list[list]
    solutions: list[list[tuple[Solution, tuple[int, ...]]]]


def opt_tables(inst: Instance, parts: Sequence[int], inner: Inner) -> FatTables:
    k = inst.k
    allc = (1 << k) - 1
    best, sols = [], []
    for m in parts:
        sub, verts = inst.restrict_mask(m)
        row_v, row_s = [None] * (1 << k), [None] * (1 << k)
        for b in range(1 << k):
            forb = allc & ~b
            sol = inner(sub.with_forbidden({v: forb for v in range(sub.n)}) if forb else sub)
            row_v[b] = sol.value
            row_s[b] = (sol, verts)
        best.append(row_v)
        sols.append(row_s)
    return FatTables(best, sols)


def _path_dp(best: list[list], k: int, order: list[int], first_allowed: int | None, last_blocked: int | None):
    """Run the prefix recurrence; returns (value, chosen sets per part).

    ``first_allowed`` restricts part 0 to subsets of it; ``last_blocked``
    zeroes (empties) every last-part set meeting it.
    """
    r = len(best)
    allc = (1 << k) - 1
    prefix = [[None] * (1 << k) for _ in range(r)]
    back = [[0] * (1 << k) for _ in range(r)]
    for b in order:
        if first_allowed is None or b & ~first_allowed == 0:
            prefix[0][b] = best[0][b]
    for t in range(1, r):
        for b in order:
            own = best[t][b]
            if t == r - 1 and last_blocked is not None and b & last_blocked:
                own = 0
            comp = allc & ~b
            top, arg = None, 0
            for bp in order:
                if bp & ~comp:
                    continue
                val = prefix[t - 1][bp]
                if val is not None and (top is None or val > top):
                    top, arg = val, bp
            prefix[t][b] = top + own
            back[t][b] = arg
    top, arg = None, 0
    for b in order:
        val = prefix[r - 1][b]
        if val is not None and (top is None or val > top):
            top, arg = val, b
    chosen = [0] * r
    chosen[r - 1] = arg
    for t in range(r - 1, 0, -1):
        chosen[t - 1] = back[t][chosen[t]]
    return top, chosen


def solve_fat(
    inst: Instance,
    parts: Sequence[int] | Sequence[Sequence[int]],
    kind: str,
    inner: Inner,
    *,
    check: bool = False,
) -> Solution:
    """Optimum on a fat path or fat cycle given a solver for single parts.

    ``parts`` are bitsets or vertex collections partitioning
    ``V(inst.graph)``.  ``check`` verifies the fat adjacency pattern first.
    """
    if kind not in ("path", "cycle"):
        raise InputError(f"kind must be 'path' or 'cycle', got {kind!r}")
    masks = [p if isinstance(p, int) else to_mask(p) for p in parts]
    if not masks:
        return EMPTY
    if kind == "cycle" and len(masks) < 3:
        raise InputError("a fat cycle needs at least 3 parts")
    if check:
        check_fat_structure(inst.graph, masks, kind)
    k = inst.k
    order = subset_order(k)
    tables = opt_tables(inst, masks, inner)

    if kind == "path":
        value, chosen = _path_dp(tables.best, k, order, None, None)
        empty_last = False
    else:
        value, chosen, empty_last = None, None, False
        for b0 in order:
            val, ch = _path_dp(tables.best, k, order, b0, b0)
            if value is None or val > value:
                value, chosen = val, ch
                empty_last = bool(ch[-1] & b0)

    pieces = []
    for t, b in enumerate(chosen):
        if t == len(chosen) - 1 and empty_last:
            continue
        pieces.append(tables.solutions[t][b])
    sol = merge_solutions(inst, pieces)
    if sol.value != value:
        raise StructureViolation(f"fat DP value {value} disagrees with its witness {sol.value}")
    return sol

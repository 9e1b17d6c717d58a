"""Brute-force reference solver."""

from __future__ import annotations

from .errors import ResourceLimitError
from .graph import iter_bits
from .instance import EMPTY, Instance, Solution, make_solution

SAFETY_LIMIT = 16


def brute_force(inst: Instance, limit: int = SAFETY_LIMIT) -> Solution:
    """Exact optimum by backtracking over all partial proper colorings.

    Vertices are visited by descending degree; each is tried with every
    positive-revenue color not used by an already colored neighbor, then
    left uncolored.  A branch is cut only when even the best revenue of every
    remaining vertex cannot beat the incumbent strictly, so the witness is
    the first optimum in enumeration order.
    """
    g = inst.graph
    n = g.n
    if n > limit:
        raise ResourceLimitError(f"brute force refused: n={n} exceeds limit {limit}")
    if n == 0:
        return EMPTY
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    best_rev = [max(inst.rev[v]) for v in order]
    suffix = [0] * (n + 1)
    for t in range(n - 1, -1, -1):
        suffix[t] = suffix[t + 1] + best_rev[t]

    color = [-1] * n
    best_value = -1
    best_coloring: list[int] = []

    def go(t: int, acc) -> None:
        nonlocal best_value, best_coloring
        if acc + suffix[t] <= best_value:
            return
        if t == n:
            best_value = acc
            best_coloring = list(color)
            return
        v = order[t]
        row = inst.rev[v]
        used = {color[u] for u in iter_bits(g.row(v))}
        for c in range(inst.k):
            if row[c] and c not in used:
                color[v] = c
                go(t + 1, acc + row[c])
                color[v] = -1
        go(t + 1, acc)

    go(0, 0)
    return make_solution(inst, {v: c for v, c in enumerate(best_coloring) if c >= 0})

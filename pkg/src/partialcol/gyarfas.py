"""
Induced paths whose closed neighborhood leaves only small components.

``gyarfas_path`` grows an induced path ``p1 .. pt`` while ``G - N[P]`` still
has a component with more than ``n/2`` vertices.  Such a component is
unique, and the one found after appending a vertex lies inside the
previous one, so the walk strictly shrinks the big component and stops
after at most ``n`` steps.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InputError, InvariantViolation
from .graph import Graph, iter_bits, popcount


def _big_component(g: Graph, avoid: int) -> int:
    """The component of ``G - avoid`` with more than n/2 vertices, or 0."""
    for comp in g.components_mask(g.full_mask & ~avoid):
        if 2 * popcount(comp) > g.n:
            return comp
    return 0


def gyarfas_path(g: Graph, v: int) -> list[int]:
    """Induced path from ``v`` with every component of G - N[P] of size <= n/2."""
    g._check(v)
    if not g.is_connected():
        raise InputError("gyarfas_path needs a connected graph")
    path = [v]
    closed = g.row(v) | 1 << v
    comp = _big_component(g, closed)
    prev = None
    while comp:
        tail = path[-1]
        # The next vertex must touch the current big component; past the
        # first step it also has to come from the previous big component so
        # that it sees no earlier path vertex.
        cand = g.row(tail)
        if prev is not None:
            cand &= prev
        for u in iter_bits(cand):
            if g.row(u) & comp:
                break
        else:  # pragma: no cover - excluded by connectivity
            raise InvariantViolation("no vertex extends the path towards the big component")
        path.append(u)
        closed |= g.row(u) | 1 << u
        prev, comp = comp, _big_component(g, closed)
    return path


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    for a in range(len(path)):
        for b in range(a + 1, len(path)):
            if g.adjacent(path[a], path[b]) != (b == a + 1):
                return False
    return True


def extend_maximal(g: Graph, path: Sequence[int]) -> list[int]:
    """Grow ``path`` at its ends while some vertex sees exactly one endvertex.

    The tail is tried before the head; among candidates the smallest id wins.
    """
    path = list(path)
    if not path:
        return path
    pmask = 0
    for v in path:
        pmask |= 1 << v
    while True:
        grown = False
        for at_tail in (True, False):
            end = path[-1] if at_tail else path[0]
            cand = g.row(end) & ~pmask
            for u in iter_bits(cand):
                if g.row(u) & pmask == 1 << end:
                    if at_tail:
                        path.append(u)
                    else:
                        path.insert(0, u)
                    pmask |= 1 << u
                    grown = True
                    break
            if grown:
                break
        if not grown:
            return path


def max_component_outside(g: Graph, path: Sequence[int]) -> int:
    """Size of the largest component of G - N[P] (0 when empty)."""
    closed = g.closed_neighborhood_mask(sum(1 << v for v in path))
    return max((popcount(c) for c in g.components_mask(g.full_mask & ~closed)), default=0)


def recursion_path(g: Graph, v: int) -> list[int]:
    """Maximal induced path on at least 3 vertices from the Gyárfás path at ``v``.

    ``v`` must have a non-neighbor.  Extension alone can stall on an edge
    ``v b`` whose endpoints have the same closed neighborhood; the path is
    then rebuilt as ``v c w`` with ``c`` a common neighbor reaching
    ``w`` outside ``N[v]``, which keeps ``N[P]`` from shrinking.
    """
    path = extend_maximal(g, gyarfas_path(g, v))
    if len(path) >= 3:
        return path
    closed = g.row(v) | 1 << v
    if closed == g.full_mask:
        raise InputError(f"vertex {v} is adjacent to every other vertex")
    for c in iter_bits(g.row(v)):
        outside = g.row(c) & ~closed
        if outside:
            w = (outside & -outside).bit_length() - 1
            return extend_maximal(g, [v, c, w])
    raise InvariantViolation("connected graph without a path leaving N[v]")  # pragma: no cover


def first_noncentral_vertex(g: Graph) -> int | None:
    """Smallest vertex whose closed neighborhood is not everything."""
    full = g.full_mask
    for v in range(g.n):
        if g.row(v) | 1 << v != full:
            return v
    return None


__all__ = [
    "gyarfas_path",
    "extend_maximal",
    "is_induced_path",
    "max_component_outside",
    "first_noncentral_vertex",
    "recursion_path",
]

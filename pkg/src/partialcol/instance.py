"""
Max Partial k-Coloring instances and solutions.

Colors are ``0..k-1`` in memory (files use ``1..k``).  Revenues are exact
non-negative rationals: integral values are kept as ``int`` and everything
else as :class:`fractions.Fraction`, so sums never touch floating point.

A zero revenue is how a color is forbidden: by convention no vertex is ever
colored with a zero-revenue color.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .errors import InputError, InvariantViolation, ValidationError
from .graph import Graph, iter_bits

Row = tuple  # tuple[int | Fraction, ...]


def as_rational(x) -> int | Fraction:
    """Normalize an exact number; integral values come back as ``int``."""
    if isinstance(x, bool) or not isinstance(x, (Rational, str)):
        raise InputError(f"revenue {x!r} is not an exact rational")
    q = Fraction(x)
    if q < 0:
        raise InputError(f"negative revenue {x!r}")
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class Instance:
    """A graph, a number of colors and a revenue table ``rev[v][i]``."""

    graph: Graph
    k: int
    rev: tuple[Row, ...]
    _key: tuple = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"k must be positive, got {self.k}")
        if len(self.rev) != self.graph.n:
            raise InputError(f"revenue has {len(self.rev)} rows for {self.graph.n} vertices")
        rows = []
        for v, row in enumerate(self.rev):
            if len(row) != self.k:
                raise InputError(f"revenue row {v} has {len(row)} entries, expected {self.k}")
            rows.append(tuple(as_rational(x) for x in row))
        object.__setattr__(self, "rev", tuple(rows))

    @classmethod
    def _trusted(cls, graph: Graph, k: int, rev: tuple[Row, ...]) -> Instance:
        inst = object.__new__(cls)
        object.__setattr__(inst, "graph", graph)
        object.__setattr__(inst, "k", k)
        object.__setattr__(inst, "rev", rev)
        object.__setattr__(inst, "_key", None)
        return inst

    @classmethod
    def unit(cls, graph: Graph, k: int) -> Instance:
        return cls(graph, k, tuple((1,) * k for _ in range(graph.n)))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def key(self) -> tuple:
        """Hashable identity used for memoization."""
        if self._key is None:
            object.__setattr__(self, "_key", (self.k, self.graph.rows, self.rev))
        return self._key

    def positive_colors(self, v: int) -> int:
        """Bitset of colors with positive revenue at ``v``."""
        m = 0
        for i, x in enumerate(self.rev[v]):
            if x:
                m |= 1 << i
        return m

    def best_revenue(self, v: int):
        return max(self.rev[v], default=0)

    # -- revenue algebra -------------------------------------------------------

    def forbid_color(self, v: int, i: int) -> Instance:
        """Copy with ``rev(v, i) = 0``; all other rows are shared."""
        if not 0 <= v < self.n or not 0 <= i < self.k:
            raise InputError(f"invalid vertex/color pair ({v}, {i})")
        if not self.rev[v][i]:
            return self
        row = list(self.rev[v])
        row[i] = 0
        rev = list(self.rev)
        rev[v] = tuple(row)
        return Instance._trusted(self.graph, self.k, tuple(rev))

    def with_forbidden(self, forbidden: Mapping[int, int]) -> Instance:
        """Copy with colors in bitset ``forbidden[v]`` zeroed at each ``v``."""
        rev = None
        for v, cmask in forbidden.items():
            row = self.rev[v]
            if not any(row[i] for i in iter_bits(cmask)):
                continue
            if rev is None:
                rev = list(self.rev)
            rev[v] = tuple(0 if cmask >> i & 1 else x for i, x in enumerate(row))
        if rev is None:
            return self
        return Instance._trusted(self.graph, self.k, tuple(rev))

    def restrict_mask(self, mask: int) -> tuple[Instance, tuple[int, ...]]:
        """Subinstance on a bitset; returns it with the new -> old vertex map."""
        g, verts = self.graph.induced_mask(mask)
        return Instance._trusted(g, self.k, tuple(self.rev[v] for v in verts)), verts

    def subinstance(self, s: Iterable[int]) -> tuple[Instance, dict[int, int]]:
        """Subinstance induced by ``s`` with the old -> new vertex map."""
        g, old_to_new = self.graph.induced_subgraph(s)
        verts = sorted(old_to_new, key=old_to_new.get)
        return Instance._trusted(g, self.k, tuple(self.rev[v] for v in verts)), old_to_new


def forbid_color(inst: Instance, v: int, i: int) -> Instance:
    return inst.forbid_color(v, i)


def subinstance(inst: Instance, s: Iterable[int]) -> tuple[Instance, dict[int, int]]:
    return inst.subinstance(s)


# -- solutions -------------------------------------------------------------------


@dataclass(frozen=True)
class Solution:
    """A colored vertex set with its exact value.

    ``coloring`` maps each colored vertex to its color; vertices outside it
    are uncolored.  Construct through :func:`make_solution` to get validation.
    """

    coloring: Mapping[int, int]
    value: Fraction

    @property
    def colored(self) -> frozenset[int]:
        return frozenset(self.coloring)

    def __len__(self):
        return len(self.coloring)


EMPTY = Solution({}, Fraction(0))


def _check_coloring(inst: Instance, coloring: Mapping[int, int], strict: bool) -> dict[int, int]:
    g = inst.graph
    out = {}
    for v in sorted(coloring):
        c = coloring[v]
        if not 0 <= v < g.n:
            raise ValidationError(f"vertex {v} out of range", v)
        if not 0 <= c < inst.k:
            raise ValidationError(f"vertex {v} has invalid color {c}", v)
        if not inst.rev[v][c]:
            if strict:
                raise ValidationError(f"vertex {v} colored {c} with zero revenue", v)
            continue
        out[v] = c
    for v, c in out.items():
        for u in iter_bits(g.row(v)):
            if out.get(u) == c:
                raise ValidationError(f"adjacent vertices {min(u, v)} and {max(u, v)} share color {c}", v)
    return out


def make_solution(inst: Instance, coloring: Mapping[int, int], *, strict: bool = True) -> Solution:
    """Validate ``coloring`` against ``inst`` and wrap it with its value.

    With ``strict=False`` zero-revenue assignments are silently dropped
    instead of rejected; impropriety is always an error.
    """
    col = _check_coloring(inst, coloring, strict)
    return Solution(col, Fraction(sum(inst.rev[v][c] for v, c in col.items())))


def value(inst: Instance, sol: Solution) -> Fraction:
    """Exact value of ``sol`` on ``inst``; raises ValidationError if invalid."""
    col = _check_coloring(inst, sol.coloring, strict=True)
    return Fraction(sum(inst.rev[v][c] for v, c in col.items()))


def merge_solutions(inst: Instance, parts: Iterable[tuple[Solution, Sequence[int] | Mapping[int, int]]]) -> Solution:
    """Union of part solutions lifted into ``inst``.

    Each part carries a map from its own vertex ids to ``inst`` ids (a
    sequence indexed by the part's vertex, or a mapping).  Overlap, an
    improper union or a value mismatch raise :class:`InvariantViolation`:
    all of them mean some branching step produced incompatible parts.
    """
    coloring: dict[int, int] = {}
    total = Fraction(0)
    for sol, to_parent in parts:
        for v, c in sol.coloring.items():
            w = to_parent[v]
            if w in coloring:
                raise InvariantViolation(f"vertex {w} colored by two parts")
            coloring[w] = c
        total += sol.value
    try:
        merged = make_solution(inst, coloring)
    except ValidationError as exc:
        raise InvariantViolation(f"merged solution invalid: {exc}") from exc
    if merged.value != total:
        raise InvariantViolation(f"merged value {merged.value} != sum of parts {total}")
    return merged


# -- list coloring -----------------------------------------------------------------


def from_list_coloring(g: Graph, lists: Mapping[int, Iterable[int]], k: int) -> Instance:
    """0/1 revenue instance: revenue 1 exactly on the colors of each list.

    Vertices missing from ``lists`` get an empty list.
    """
    rev = []
    for v in range(g.n):
        allowed = set(lists.get(v, ()))
        if any(not 0 <= c < k for c in allowed):
            raise InputError(f"list of vertex {v} has colors outside 0..{k - 1}")
        rev.append(tuple(1 if c in allowed else 0 for c in range(k)))
    return Instance(g, k, tuple(rev))


def is_list_colorable(g: Graph, lists: Mapping[int, Iterable[int]], k: int, config=None) -> bool:
    """Whether ``g`` has a proper coloring respecting the lists.

    Graphs with a clique larger than ``k`` are rejected without solving.
    """
    from .solver import solve

    if g.n == 0:
        return True
    if g.clique_number() > k:
        return False
    sol = solve(from_list_coloring(g, lists, k), config)
    return sol.value == g.n

"""
Forbidden induced patterns and a small-pattern induced matcher.

The three patterns are hard-coded:

* bull  -- triangle ``a b c`` with pendants ``d`` on ``a`` and ``e`` on ``b``;
* chair -- center ``d`` adjacent to ``u``, ``v1``, ``v3``; ``u'`` pendant on ``u``;
* E     -- induced path ``p1 .. p5`` with ``q`` pendant on ``p3``.

The chair sits inside E (drop ``p1``), so (bull, chair)-free graphs are
(bull, E)-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph
    labels: tuple[str, ...]


BULL = Pattern(
    "bull",
    Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
    ("a", "b", "c", "d", "e"),
)
CHAIR = Pattern(
    "chair",
    Graph(5, [(0, 1), (0, 2), (0, 3), (1, 4)]),
    ("d", "u", "v1", "v3", "u'"),
)
E = Pattern(
    "E",
    Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
    ("p1", "p2", "p3", "p4", "p5", "q"),
)
PATTERNS = {p.name: p for p in (BULL, CHAIR, E)}


def _embeddings(g: Graph, p: Pattern):
    """Yield all induced embeddings as tuples indexed by pattern vertex.

    Enumeration is lexicographic in (image of p0, image of p1, ...).  Pattern
    vertices are placed in pattern order, so the first hit is the
    lexicographically least embedding.
    """
    pg = p.graph
    q = pg.n
    if q > g.n:
        return
    pdeg = [pg.degree(v) for v in range(q)]
    hdeg = [g.degree(v) for v in range(g.n)]
    full = g.full_mask
    image = [-1] * q
    # Every catalog pattern has each vertex adjacent to an earlier one, so
    # filtering by placed vertices keeps the candidate sets small.

    def place(t: int, used: int):
        if t == q:
            yield tuple(image)
            return
        cand = full & ~used
        for s in range(t):
            w = image[s]
            if pg.adjacent(s, t):
                cand &= g.row(w)
            else:
                cand &= ~g.row(w)
            if not cand:
                return
        for v in iter_bits(cand):
            if hdeg[v] < pdeg[t]:
                continue
            image[t] = v
            yield from place(t + 1, used | 1 << v)
        image[t] = -1

    yield from place(0, 0)


def find_induced(g: Graph, p: Pattern) -> dict[int, int] | None:
    """Lexicographically least induced embedding of ``p`` into ``g``, or None.

    The result maps pattern vertex -> host vertex.
    """
    for emb in _embeddings(g, p):
        return dict(enumerate(emb))
    return None


def is_induced_embedding(g: Graph, p: Pattern, emb: dict[int, int]) -> bool:
    pg = p.graph
    if sorted(emb) != list(range(pg.n)) or len(set(emb.values())) != pg.n:
        return False
    return all(
        pg.adjacent(x, y) == g.adjacent(emb[x], emb[y])
        for x in range(pg.n)
        for y in range(x + 1, pg.n)
    )


@dataclass
class Membership:
    bull_free: bool
    chair_free: bool
    e_free: bool
    witnesses: dict[str, dict[int, int]] = field(default_factory=dict)

    @property
    def in_bull_e_class(self) -> bool:
        return self.bull_free and self.e_free

    @property
    def in_bull_chair_class(self) -> bool:
        return self.bull_free and self.chair_free


def class_membership(g: Graph) -> Membership:
    """Freeness flags for bull, chair and E, with a witness for each failure."""
    witnesses = {}
    for p in (BULL, CHAIR, E):
        emb = find_induced(g, p)
        if emb is not None:
            witnesses[p.name] = emb
    return Membership(
        bull_free="bull" not in witnesses,
        chair_free="chair" not in witnesses,
        e_free="E" not in witnesses,
        witnesses=witnesses,
    )


def in_class(g: Graph, class_filter: str | None) -> bool:
    """Membership test for a filter name: ``'E'``, ``'chair'`` or None."""
    return witness_for(g, class_filter) is None


def witness_for(g: Graph, class_filter: str | None = "E") -> tuple[str, dict[int, int]] | None:
    """First forbidden pattern found for ``class_filter`` (bull checked first)."""
    if class_filter is None:
        return None
    for p in (BULL, CHAIR if class_filter == "chair" else E):
        emb = find_induced(g, p)
        if emb is not None:
            return p.name, emb
    return None

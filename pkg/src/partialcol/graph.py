"""
Simple undirected graphs backed by a bit-matrix.

Vertices are the integers ``0..n-1``.  Row ``v`` of the adjacency matrix is a
Python ``int`` whose bit ``u`` is set iff ``uv`` is an edge, so neighborhood
intersections, completeness tests and component searches are a handful of
bitwise operations.  Public methods speak in vertex collections; the
``*_mask`` helpers expose the raw bitsets to the algorithmic modules.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import InputError

VertexSet = frozenset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_rows", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> Graph:
        """Build from adjacency bitsets; symmetry and loop-freeness are checked."""
        g = cls.__new__(cls)
        g.n = len(rows)
        g._rows = tuple(rows)
        g._hash = None
        full = (1 << g.n) - 1
        for v, row in enumerate(g._rows):
            if row & ~full or row >> v & 1:
                raise InputError(f"invalid adjacency row for vertex {v}")
            for u in iter_bits(row):
                if not g._rows[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        return g

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> Graph:
        g = cls.__new__(cls)
        g.n = len(rows)
        g._rows = rows
        g._hash = None
        return g

    # -- basic queries -------------------------------------------------------

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def _check_set(self, s: Iterable[int]) -> int:
        m = 0
        for v in s:
            self._check(v)
            m |= 1 << v
        return m

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def row(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitset."""
        return self._rows[v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self._rows[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self._rows) // 2

    def neighborhood_mask(self, mask: int) -> int:
        """Open neighborhood N(X) = N[X] minus X of a bitset."""
        return self.closed_neighborhood_mask(mask) & ~mask

    def closed_neighborhood_mask(self, mask: int) -> int:
        out = mask
        for v in iter_bits(mask):
            out |= self._rows[v]
        return out

    # -- derived structure ---------------------------------------------------

    def induced_subgraph(self, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Induced subgraph on ``s`` plus the relabeling old id -> new id.

        New ids follow the increasing order of the old ones.
        """
        verts = bits(self._check_set(s))
        return self._induced(verts), {old: new for new, old in enumerate(verts)}

    def induced_mask(self, mask: int) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on a bitset; returns the graph and new -> old ids."""
        verts = tuple(iter_bits(mask))
        return self._induced(verts), verts

    def _induced(self, verts: Sequence[int]) -> Graph:
        pos = {old: new for new, old in enumerate(verts)}
        rows = []
        for old in verts:
            r = 0
            for u in iter_bits(self._rows[old]):
                p = pos.get(u)
                if p is not None:
                    r |= 1 << p
            rows.append(r)
        return Graph._trusted(tuple(rows))

    def components_mask(self, mask: int | None = None) -> list[int]:
        """Connected components of G[mask] as bitsets, ordered by smallest member."""
        if mask is None:
            mask = self.full_mask
        comps = []
        rest = mask
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self._rows[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    def connected_components(self) -> list[tuple[int, ...]]:
        return [tuple(iter_bits(c)) for c in self.components_mask()]

    def is_connected(self) -> bool:
        return len(self.components_mask()) <= 1

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(self._rows[v] | (1 << v) == full for v in range(self.n))

    def _disjoint_pair(self, x: Iterable[int], y: Iterable[int]) -> tuple[int, int]:
        xm, ym = self._check_set(x), self._check_set(y)
        if xm & ym:
            raise InputError(f"sets overlap on {bits(xm & ym)}")
        return xm, ym

    def complete_mask(self, xm: int, ym: int) -> bool:
        return all(self._rows[v] & ym == ym for v in iter_bits(xm))

    def anticomplete_mask(self, xm: int, ym: int) -> bool:
        return all(not self._rows[v] & ym for v in iter_bits(xm))

    def is_complete_between(self, x: Iterable[int], y: Iterable[int]) -> bool:
        return self.complete_mask(*self._disjoint_pair(x, y))

    def is_anticomplete_between(self, x: Iterable[int], y: Iterable[int]) -> bool:
        return self.anticomplete_mask(*self._disjoint_pair(x, y))

    def independent_mask(self, mask: int) -> bool:
        return all(not self._rows[v] & mask for v in iter_bits(mask))

    def is_independent(self, s: Iterable[int]) -> bool:
        return self.independent_mask(self._check_set(s))

    def clique_number(self) -> int:
        if self.n == 0:
            raise InputError("clique number of the empty graph is undefined")
        return len(max_clique(self))

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- cliques ------------------------------------------------------------------


def _greedy_color_bound(g: Graph, cand: int) -> tuple[list[int], list[int]]:
    """Sequential greedy coloring of G[cand]; returns vertices and color counts.

    The i-th color count bounds the clique size extendable from the first
    i vertices, which is what branch and bound prunes on.
    """
    order, bounds = [], []
    color = 0
    rest = cand
    while rest:
        color += 1
        q = rest
        while q:
            v = lowest(q)
            q &= ~(1 << v) & ~g.row(v)
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(g: Graph, mask: int | None = None) -> list[int]:
    """Exact maximum clique of G[mask] via branch and bound with coloring bounds."""
    if mask is None:
        mask = g.full_mask
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = _greedy_color_bound(g, cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[idx] <= len(best):
                return
            v = order[idx]
            clique.append(v)
            nxt = cand & g.row(v)
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], mask)
    return sorted(best)


def find_clique(g: Graph, size: int, mask: int | None = None) -> list[int] | None:
    """Lexicographically first clique with exactly ``size`` vertices, if any."""
    if mask is None:
        mask = g.full_mask
    if size <= 0:
        return []

    def extend(clique: list[int], cand: int) -> list[int] | None:
        if len(clique) == size:
            return clique
        while cand and popcount(cand) >= size - len(clique):
            v = lowest(cand)
            cand &= ~(1 << v)
            found = extend(clique + [v], cand & g.row(v))
            if found is not None:
                return found
        return None

    return extend([], mask)


# -- named graphs ---------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges())
        off += h.n
    return Graph(off, edges)

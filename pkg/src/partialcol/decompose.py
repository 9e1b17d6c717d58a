"""
Fat path / fat cycle decomposition around a long maximal induced path.

Given a connected (bull, E)-free graph and a maximal induced path ``P`` on
at least 7 vertices, the vertex set splits into

* ``parts`` -- consecutive non-empty sets ``V_1 .. V_r`` forming a fat path
  (``r >= 7``) or fat cycle (``r >= 8``);
* ``separator`` -- vertices complete to all parts;
* ``remainder`` -- everything else, with no edge to any part.

First ``P`` is closed into an induced cycle ``Q`` when some outside vertex
sees exactly the two endvertices; otherwise ``Q = P``.  Every neighbor of
``Q`` then has one of five neighborhood signatures on ``Q`` (positions are
0-based along ``Q``, cyclic when ``Q`` is a cycle):

=========== =========================================== ==================
kind        neighborhood on Q                           goes to
=========== =========================================== ==================
END_FIRST   ``{1}`` or ``{0, 1}`` (paths only)          ``V_0``
END_LAST    ``{r-2}`` or ``{r-2, r-1}`` (paths only)    ``V_{r-1}``
SKIP(i)     ``{i-1, i+1}``                              ``V_i``
TRIPLE(i)   ``{i-1, i, i+1}``                           ``V_i``
FULL        all of ``Q``                                separator
=========== =========================================== ==================

A neighbor matching none of them certifies that the graph contains a bull
or an E.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import ClassViolation, InputError, StructureViolation
from .graph import Graph, bits, iter_bits, popcount, to_mask
from .gyarfas import extend_maximal, is_induced_path


class NQKind(enum.Enum):
    END_FIRST = "end_first"
    END_LAST = "end_last"
    SKIP = "skip"
    TRIPLE = "triple"
    FULL = "full"


@dataclass(frozen=True)
class NQClass:
    kind: NQKind
    index: int | None = None


@dataclass(frozen=True)
class FatDecomposition:
    kind: str  # "path" | "cycle"
    parts: tuple[frozenset[int], ...]
    separator: frozenset[int]
    remainder: frozenset[int]
    core: tuple[int, ...] = field(default=())  # Q, in order

    @property
    def order(self) -> int:
        return len(self.parts)

    @property
    def part_masks(self) -> list[int]:
        return [to_mask(p) for p in self.parts]

    @property
    def fat_mask(self) -> int:
        return to_mask(v for p in self.parts for v in p)

    @property
    def separator_mask(self) -> int:
        return to_mask(self.separator)

    @property
    def remainder_mask(self) -> int:
        return to_mask(self.remainder)


@dataclass(frozen=True)
class Violation:
    check: str
    detail: str
    witness: tuple[int, ...] = ()


def _is_maximal(g: Graph, path: Sequence[int]) -> bool:
    return extend_maximal(g, path) == list(path)


def close_to_cycle(g: Graph, path: Sequence[int]) -> tuple[list[int], str]:
    """Close ``path`` into an induced cycle through a vertex seeing only its ends.

    Returns ``(Q, "cycle")`` with the closing vertex appended, or
    ``(path, "path")`` when no such vertex exists.
    """
    if len(path) < 7:
        raise InputError(f"need a path with at least 7 vertices, got {len(path)}")
    pmask = to_mask(path)
    ends = 1 << path[0] | 1 << path[-1]
    for v in range(g.n):
        if not pmask >> v & 1 and g.row(v) & pmask == ends:
            return list(path) + [v], "cycle"
    return list(path), "path"


def classify_nq(g: Graph, q: Sequence[int], kind: str) -> dict[int, NQClass]:
    """Classify every vertex of N(Q) by its neighborhood signature on Q.

    Raises :class:`ClassViolation` carrying the first vertex that fits no
    signature.
    """
    r = len(q)
    if kind not in ("path", "cycle") or r < (8 if kind == "cycle" else 7):
        raise InputError(f"invalid core: kind={kind!r}, order {r}")
    pos = {v: t for t, v in enumerate(q)}
    qmask = to_mask(q)
    full_sig = (1 << r) - 1
    signatures: dict[int, NQClass] = {}
    if kind == "path":
        signatures[0b10] = NQClass(NQKind.END_FIRST)
        signatures[0b11] = NQClass(NQKind.END_FIRST)
        signatures[1 << (r - 2)] = NQClass(NQKind.END_LAST)
        signatures[3 << (r - 2)] = NQClass(NQKind.END_LAST)
        centers = range(1, r - 1)
    else:
        centers = range(r)
    for i in centers:
        lo, hi = (i - 1) % r, (i + 1) % r
        signatures[1 << lo | 1 << hi] = NQClass(NQKind.SKIP, i)
        signatures[1 << lo | 1 << i | 1 << hi] = NQClass(NQKind.TRIPLE, i)
    signatures[full_sig] = NQClass(NQKind.FULL)

    out = {}
    for w in iter_bits(g.neighborhood_mask(qmask)):
        sig = 0
        for u in iter_bits(g.row(w) & qmask):
            sig |= 1 << pos[u]
        cls = signatures.get(sig)
        if cls is None:
            seen = sorted(pos[u] for u in iter_bits(g.row(w) & qmask))
            raise ClassViolation(
                f"vertex {w} sees core positions {seen}, which fits no admissible signature",
                vertex=w,
            )
        out[w] = cls
    return out


def build_decomposition(g: Graph, path: Sequence[int]) -> FatDecomposition:
    """Fat path/cycle, separator and remainder for a maximal induced path.

    The result is validated before being returned; any failed requirement
    raises :class:`StructureViolation`.
    """
    if len(path) < 7:
        raise InputError(f"need a path with at least 7 vertices, got {len(path)}")
    if not is_induced_path(g, path) or not _is_maximal(g, path):
        raise InputError("path must be a maximal induced path")
    if not g.is_connected():
        raise InputError("graph must be connected")
    q, kind = close_to_cycle(g, path)
    classes = classify_nq(g, q, kind)
    r = len(q)
    parts = [{v} for v in q]
    separator = set()
    for w, cls in classes.items():
        if cls.kind is NQKind.FULL:
            separator.add(w)
        elif cls.kind is NQKind.END_FIRST:
            parts[0].add(w)
        elif cls.kind is NQKind.END_LAST:
            parts[r - 1].add(w)
        else:
            parts[cls.index].add(w)
    used = set(separator).union(*parts)
    dec = FatDecomposition(
        kind=kind,
        parts=tuple(frozenset(p) for p in parts),
        separator=frozenset(separator),
        remainder=frozenset(v for v in range(g.n) if v not in used),
        core=tuple(q),
    )
    problems = validate_decomposition(g, dec)
    if problems:
        first = problems[0]
        raise StructureViolation(f"{first.check}: {first.detail}", witness=first.witness)
    return dec


def validate_decomposition(g: Graph, dec: FatDecomposition, core: Sequence[int] | None = None) -> list[Violation]:
    """Every broken decomposition requirement, as data.

    Checks: non-empty parts, order, partition of V(G), fat adjacency between
    parts, separator complete to the parts, no part-remainder edges, and --
    when a core is known -- remainder disjoint from N[Q].
    """
    out: list[Violation] = []
    masks = dec.part_masks
    r = len(masks)
    if core is None:
        core = dec.core
    for t, m in enumerate(masks):
        if not m:
            out.append(Violation("nonempty_parts", f"part {t} is empty"))
    min_order = 8 if dec.kind == "cycle" else 7
    if r < min_order:
        out.append(Violation("order", f"{dec.kind} of order {r} < {min_order}"))

    seen = 0
    overlap = 0
    for m in masks + [dec.separator_mask, dec.remainder_mask]:
        overlap |= seen & m
        seen |= m
    if overlap:
        out.append(Violation("partition", "sets overlap", tuple(bits(overlap))))
    if seen != g.full_mask:
        out.append(Violation("partition", "sets do not cover V(G)", tuple(bits(g.full_mask & ~seen))))

    for a in range(r):
        for b in range(a + 1, r):
            consecutive = b == a + 1 or (dec.kind == "cycle" and (a, b) == (0, r - 1))
            for u in iter_bits(masks[a]):
                hits = g.row(u) & masks[b]
                if consecutive and hits != masks[b]:
                    v = next(iter_bits(masks[b] & ~hits))
                    out.append(Violation("fat_structure", f"parts {a},{b} not complete", (u, v)))
                    break
                if not consecutive and hits:
                    out.append(Violation("fat_structure", f"parts {a},{b} not anticomplete", (u, next(iter_bits(hits)))))
                    break

    fat = dec.fat_mask
    for d in iter_bits(dec.separator_mask):
        missing = fat & ~g.row(d)
        if missing:
            out.append(Violation("separator_complete", f"separator vertex {d} misses a part vertex", (d, next(iter_bits(missing)))))
    for u in iter_bits(fat):
        hits = g.row(u) & dec.remainder_mask
        if hits:
            out.append(Violation("separates", f"edge between part vertex {u} and remainder", (u, next(iter_bits(hits)))))
    if core:
        closed = g.closed_neighborhood_mask(to_mask(core))
        bad = closed & dec.remainder_mask
        if bad:
            out.append(Violation("remainder_outside_core", "remainder meets N[Q]", tuple(bits(bad))))
    return out


def chair_component_dominators(g: Graph, dec: FatDecomposition) -> dict[tuple[int, ...], int]:
    """For each remainder component, the smallest separator vertex complete to it.

    Always exists on (bull, chair)-free graphs; otherwise raises
    :class:`ClassViolation` with the undominated component.
    """
    out = {}
    sep = bits(dec.separator_mask)
    for comp in g.components_mask(dec.remainder_mask):
        for d in sep:
            if g.row(d) & comp == comp:
                out[tuple(iter_bits(comp))] = d
                break
        else:
            raise ClassViolation("remainder component has no complete separator vertex", witness=tuple(iter_bits(comp)))
    return out


def path_neighborhood_dominators(g: Graph, path: Sequence[int]) -> dict[tuple[int, ...], int]:
    """For each component of G - N[P], the smallest vertex of N(P) complete to it."""
    pmask = to_mask(path)
    closed = g.closed_neighborhood_mask(pmask)
    boundary = bits(closed & ~pmask)
    out = {}
    for comp in g.components_mask(g.full_mask & ~closed):
        for w in boundary:
            if g.row(w) & comp == comp:
                out[tuple(iter_bits(comp))] = w
                break
        else:
            raise ClassViolation("component outside N[P] has no complete neighbor of P", witness=tuple(iter_bits(comp)))
    return out


def largest_remainder_component(g: Graph, dec: FatDecomposition) -> int:
    return max((popcount(c) for c in g.components_mask(dec.remainder_mask)), default=0)

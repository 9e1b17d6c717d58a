"""
Exact Max Partial k-Coloring on (bull, E)-free graphs.

The recursion, for a connected non-complete instance on more than ``n0``
vertices:

1. build a Gyárfás path from the smallest vertex ``v`` with ``N[v] != V`` and
   extend it to a maximal induced path ``P``;
2. if ``|P| <= 6`` (*short path*): layer ``N(P)`` into ``A_1 .. A_p`` (``A_j``
   sees ``x_j`` but no earlier path vertex), let ``A_{p+1} = V - N[P]``, guess
   the coloring of ``P`` and, per layer and color, at most two vertices
   representing the color class towards later layers.  After the matching
   revenue forbiddings edges between different layers have disjoint
   positive-revenue lists, so every layer and every component of
   ``A_{p+1}`` is solved independently;
3. otherwise (*long path*): decompose into fat parts, separator and
   remainder, guess the colors used on the fat parts, solve them by the fat
   DP, guess at most two representatives per color inside the separator
   and solve the separator and each remainder component independently.

Every branch yields a valid solution and the branch matching an optimum
yields an optimum, so the maximum over branches is exact.  Guess
enumeration only keeps inclusion-minimal representative sets (each member
has a private neighbor in the later layers); the minimal set of the
optimum always survives, so this loses nothing.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .decompose import (
    FatDecomposition,
    build_decomposition,
    chair_component_dominators,
    path_neighborhood_dominators,
    validate_decomposition,
)
from .errors import InputError, InvariantViolation, ResourceLimitError, StructureViolation
from .fatdp import solve_fat, subset_order
from .graph import Graph, find_clique, iter_bits, to_mask
from .gyarfas import first_noncentral_vertex, max_component_outside, recursion_path
from .instance import EMPTY, Instance, Solution, merge_solutions
from .oracle import brute_force
from .patterns import class_membership

ASSERT_LEVELS = ("off", "cheap", "full")
MODES = ("auto", "subexponential", "oracle")


@dataclass(frozen=True)
class SolverConfig:
    n0: int = 8
    branch_cap: int = 10**8
    assert_level: str = "cheap"
    mode: str = "auto"

    def __post_init__(self):
        if self.n0 < 1:
            raise InputError("n0 must be at least 1")
        if self.branch_cap < 1:
            raise InputError("branch_cap must be at least 1")
        if self.assert_level not in ASSERT_LEVELS:
            raise InputError(f"assert_level must be one of {ASSERT_LEVELS}")
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}")


@dataclass
class SolverStats:
    nodes: int = 0
    memo_hits: int = 0
    brute_force: int = 0
    complete: int = 0
    disconnected: int = 0
    case_a: int = 0
    case_b: int = 0
    case_a_branches: int = 0
    case_b_branches: int = 0
    disjoint_checks: int = 0
    disjoint_failures: int = 0
    chair_checks: int = 0
    subexp_nodes: int = 0
    subexp_branches: int = 0


# -- short-path layering -----------------------------------------------------------


@dataclass(frozen=True)
class CaseAPartition:
    """Path ``x_1 .. x_p``, layers ``A_1 .. A_p`` and the outside set.

    ``layers[j]`` is a bitset; ``outside`` is ``V - N[P]``.
    """

    path: tuple[int, ...]
    layers: tuple[int, ...]
    outside: int

    def later(self, j: int) -> int:
        """Union of layers after ``j`` together with the outside set."""
        m = self.outside
        for t in range(j + 1, len(self.layers)):
            m |= self.layers[t]
        return m

    def layer_of(self) -> dict[int, int]:
        out = {}
        for j, m in enumerate(self.layers):
            for v in iter_bits(m):
                out[v] = j
        for v in iter_bits(self.outside):
            out[v] = len(self.layers)
        return out


def case_a_partition(g: Graph, path: Sequence[int]) -> CaseAPartition:
    pmask = to_mask(path)
    claimed = pmask
    layers = []
    for x in path:
        layer = g.row(x) & ~claimed
        layers.append(layer)
        claimed |= layer
    return CaseAPartition(tuple(path), tuple(layers), g.full_mask & ~claimed)


@dataclass(frozen=True)
class GuessA:
    """Colors of the path vertices (None = uncolored) and representative sets.

    ``separators[(j, i)]`` is a bitset inside layer ``j`` of vertices that
    will be colored ``i``; missing keys mean the empty set.
    """

    path_colors: tuple[int | None, ...]
    separators: dict[tuple[int, int], int] = field(default_factory=dict)


def _minimal_options(g: Graph, pool: int, towards: int) -> list[int]:
    """Empty set, then singletons and non-adjacent pairs of ``pool`` that are
    inclusion-minimal for their neighborhood in ``towards``."""
    opts = [0]
    verts = [u for u in iter_bits(pool) if g.row(u) & towards]
    opts.extend(1 << u for u in verts)
    for a, b in itertools.combinations(verts, 2):
        if g.adjacent(a, b):
            continue
        na, nb = g.row(a) & towards, g.row(b) & towards
        if na & ~nb and nb & ~na:
            opts.append(1 << a | 1 << b)
    return opts


def _representative_guesses(
    g: Graph, slots: list[tuple[int, int, list[int]]], k: int
) -> Iterator[dict[tuple[int, int], int]]:
    """Consistent combinations: per color the union is independent, and no
    vertex represents two colors."""
    n_slots = len(slots)
    chosen: dict[tuple[int, int], int] = {}
    by_color = [0] * k
    by_color_nbhd = [0] * k

    def go(t: int, used: int):
        if t == n_slots:
            yield dict(chosen)
            return
        j, i, options = slots[t]
        for opt in options:
            if opt:
                if opt & used or opt & by_color_nbhd[i]:
                    continue
                nb = 0
                for u in iter_bits(opt):
                    nb |= g.row(u)
                save = by_color[i], by_color_nbhd[i]
                by_color[i] |= opt
                by_color_nbhd[i] |= nb
                chosen[(j, i)] = opt
                yield from go(t + 1, used | opt)
                del chosen[(j, i)]
                by_color[i], by_color_nbhd[i] = save
            else:
                yield from go(t + 1, used)

    yield from go(0, 0)


def case_a_guesses(inst: Instance, part: CaseAPartition) -> Iterator[GuessA]:
    """All consistent short-path guesses in canonical order."""
    g, k = inst.graph, inst.k
    path = part.path
    options = [[None] + [c for c in range(k) if inst.rev[x][c]] for x in path]
    for colors in itertools.product(*options):
        if any(a is not None and a == b for a, b in zip(colors, colors[1:])):
            continue
        near_color = [0] * k
        for x, c in zip(path, colors):
            if c is not None:
                near_color[c] |= g.row(x)
        slots = []
        for j, layer in enumerate(part.layers):
            if not layer:
                continue
            towards = part.later(j)
            for i in range(k):
                pool = 0
                for u in iter_bits(layer & ~near_color[i]):
                    if inst.rev[u][i]:
                        pool |= 1 << u
                opts = _minimal_options(g, pool, towards) if towards else [0]
                if len(opts) > 1:
                    slots.append((j, i, opts))
        for seps in _representative_guesses(g, slots, k):
            yield GuessA(colors, seps)


def _forbid_representatives(g: Graph, k: int, forb: dict[int, int], layer: int, towards: int, color: int, reps: int) -> None:
    bit = 1 << color
    keep_only = ((1 << k) - 1) & ~bit
    reps_nbhd = 0
    for u in iter_bits(reps):
        forb[u] = forb.get(u, 0) | keep_only
        reps_nbhd |= g.row(u)
    for w in iter_bits(reps_nbhd):
        forb[w] = forb.get(w, 0) | bit
    # A later vertex not adjacent to any representative has no neighbor of
    # this color in the layer.
    for v in iter_bits(towards & ~reps_nbhd):
        for w in iter_bits(g.row(v) & layer):
            forb[w] = forb.get(w, 0) | bit


def apply_forbiddings_a(inst: Instance, part: CaseAPartition, guess: GuessA) -> Instance:
    """Revenue table compatible with ``guess``.

    (a) the color of each colored path vertex is forbidden on its neighbors;
    (b) a representative of color ``i`` keeps only ``i`` and ``i`` is
    forbidden on its neighbors; (c) for a later vertex ``v`` with no neighbor
    among the layer-``j`` representatives of ``i``, ``i`` is forbidden on
    ``N(v) & A_j``.  Rule (c) applies to every layer and color, including
    those whose representative set is empty.
    """
    g, k = inst.graph, inst.k
    forb: dict[int, int] = {}
    for x, c in zip(part.path, guess.path_colors):
        if c is not None:
            for w in iter_bits(g.row(x)):
                forb[w] = forb.get(w, 0) | 1 << c
    for j, layer in enumerate(part.layers):
        if not layer:
            continue
        towards = part.later(j)
        for i in range(k):
            _forbid_representatives(g, k, forb, layer, towards, i, guess.separators.get((j, i), 0))
    return inst.with_forbidden(forb)


def disjoint_lists_violations(inst: Instance, groups: dict[int, int]) -> list[tuple[int, int]]:
    """Edges between different groups whose endpoints share a positive color."""
    g = inst.graph
    pos = [inst.positive_colors(v) for v in range(g.n)]
    bad = []
    for u, gu in groups.items():
        for v in iter_bits(g.row(u)):
            if v > u and v in groups and groups[v] != gu and pos[u] & pos[v]:
                bad.append((u, v))
    return bad


# -- long-path guesses --------------------------------------------------------------


def case_b_guesses(inst: Instance, separator: int, remainder: int) -> Iterator[dict[int, int]]:
    """Per color at most two separator vertices representing it towards the remainder."""
    g, k = inst.graph, inst.k
    slots = []
    for i in range(k):
        pool = 0
        for d in iter_bits(separator):
            if inst.rev[d][i]:
                pool |= 1 << d
        opts = _minimal_options(g, pool, remainder) if remainder else [0]
        if len(opts) > 1:
            slots.append((0, i, opts))
    for combo in _representative_guesses(g, slots, k):
        yield {i: m for (_, i), m in combo.items()}


def apply_forbiddings_b(inst: Instance, separator: int, remainder: int, reps: dict[int, int]) -> Instance:
    g, k = inst.graph, inst.k
    forb: dict[int, int] = {}
    for i in range(k):
        _forbid_representatives(g, k, forb, separator, remainder, i, reps.get(i, 0))
    return inst.with_forbidden(forb)


# -- cliques ---------------------------------------------------------------------------


def solve_complete(inst: Instance) -> Solution:
    """Optimum on a complete graph: an injective vertex -> color assignment.

    Exact DP over vertices with the set of used colors as state; the first
    optimal choice in (uncolored, color 0, color 1, ...) order is kept.
    """
    g, k = inst.graph, inst.k
    if not g.is_complete():
        raise InputError("solve_complete needs a complete graph")
    n = g.n
    # table[t][used] = best value on vertices t.. given colors used so far
    table: list[dict[int, object]] = [dict() for _ in range(n + 1)]

    def best(t: int, used: int):
        if t == n:
            return 0
        memo = table[t]
        if used in memo:
            return memo[used][0]
        top, arg = best(t + 1, used), None
        row = inst.rev[t]
        for c in range(k):
            if row[c] and not used >> c & 1:
                val = row[c] + best(t + 1, used | 1 << c)
                if val > top:
                    top, arg = val, c
        memo[used] = (top, arg)
        return top

    best(0, 0)
    coloring, used = {}, 0
    for t in range(n):
        _, arg = table[t][used]
        if arg is not None:
            coloring[t] = arg
            used |= 1 << arg
    value = Fraction(sum(inst.rev[v][c] for v, c in coloring.items()))
    return Solution(coloring, value)


def minimal_dominators(g: Graph, s0, t) -> frozenset[int]:
    """Inclusion-minimal subset of ``s0`` with the same neighborhood in ``t``.

    Vertices are dropped greedily in increasing order whenever the rest
    still covers ``N(s0) & t``.
    """
    sm, tm = to_mask(s0), to_mask(t)
    if sm & tm:
        raise InputError("s0 and t must be disjoint")
    target = g.neighborhood_mask(sm) & tm
    keep = sm
    for u in iter_bits(sm):
        rest = keep & ~(1 << u)
        cover = 0
        for w in iter_bits(rest):
            cover |= g.row(w)
        if cover & tm == target:
            keep = rest
    return frozenset(iter_bits(keep))


def subexp_threshold(n: int) -> int:
    """Clique size that triggers branching in the subexponential wrapper."""
    return math.ceil(math.sqrt(n / math.log2(n)))


# -- the solver ------------------------------------------------------------------------


class Solver:
    """Recursive solver; one instance per top-level query (memo and stats)."""

    def __init__(self, config: SolverConfig | None = None):
        self.config = config or SolverConfig()
        self.stats = SolverStats()
        self._memo: dict[tuple, Solution] = {}
        self._subexp_memo: dict[tuple, Solution] = {}
        self._chair_free = False

    @property
    def _full(self) -> bool:
        return self.config.assert_level == "full"

    @property
    def _cheap(self) -> bool:
        return self.config.assert_level != "off"

    def solve(self, inst: Instance) -> Solution:
        """Maximum-value solution, dispatched on ``config.mode``."""
        if self._full and inst.n:
            m = class_membership(inst.graph)
            self._chair_free = m.bull_free and m.chair_free
        if self.config.mode == "oracle":
            return brute_force(inst)
        if self.config.mode == "subexponential":
            return self.solve_subexponential(inst)
        return self._solve(inst)

    # -- recursion ------------------------------------------------------------

    def _solve(self, inst: Instance) -> Solution:
        key = inst.key
        hit = self._memo.get(key)
        if hit is not None:
            self.stats.memo_hits += 1
            return hit
        sol = self._dispatch(inst)
        self._memo[key] = sol
        return sol

    def _dispatch(self, inst: Instance) -> Solution:
        self.stats.nodes += 1
        g = inst.graph
        if g.n == 0:
            return EMPTY
        if g.n <= self.config.n0:
            self.stats.brute_force += 1
            return brute_force(inst)
        comps = g.components_mask()
        if len(comps) > 1:
            self.stats.disconnected += 1
            return self._solve_parts(inst, inst, comps)
        if g.is_complete():
            self.stats.complete += 1
            return solve_complete(inst)
        v = first_noncentral_vertex(g)
        path = recursion_path(g, v)
        if self._cheap and 2 * max_component_outside(g, path) > g.n:
            raise InvariantViolation("extended path lost the half-size component bound")
        if len(path) <= 6:
            return self.case_a(inst, path)
        return self.case_b(inst, path)

    def _solve_parts(self, parent: Instance, source: Instance, masks: Sequence[int], extra=()) -> Solution:
        pieces = list(extra)
        for m in masks:
            if m:
                sub, verts = source.restrict_mask(m)
                pieces.append((self._solve(sub), verts))
        return merge_solutions(parent, pieces)

    def _count(self, branches: int) -> None:
        if branches > self.config.branch_cap:
            raise ResourceLimitError(f"more than {self.config.branch_cap} branches at one node")

    def case_a(self, inst: Instance, path: Sequence[int]) -> Solution:
        """Short maximal induced path (3 to 6 vertices)."""
        self.stats.case_a += 1
        g = inst.graph
        if not 3 <= len(path) <= 6:
            raise InputError(f"short-path case needs 3..6 path vertices, got {len(path)}")
        part = case_a_partition(g, path)
        if self._full and self._chair_free:
            path_neighborhood_dominators(g, path)
            self.stats.chair_checks += 1
        outside = g.components_mask(part.outside)
        groups = part.layer_of() if self._full else None
        best, branches = None, 0
        for guess in case_a_guesses(inst, part):
            branches += 1
            self._count(branches)
            sub = apply_forbiddings_a(inst, part, guess)
            if groups is not None:
                self.stats.disjoint_checks += 1
                bad = disjoint_lists_violations(sub, groups)
                if bad:
                    self.stats.disjoint_failures += 1
                    raise InvariantViolation(f"layer edges {bad} share positive colors")
            colored = {x: c for x, c in zip(path, guess.path_colors) if c is not None}
            head = Solution(colored, Fraction(sum(inst.rev[x][c] for x, c in colored.items())))
            cand = self._solve_parts(inst, sub, list(part.layers) + outside, [(head, range(g.n))])
            if best is None or cand.value > best.value:
                best = cand
        self.stats.case_a_branches += branches
        return best

    def case_b(self, inst: Instance, path: Sequence[int]) -> Solution:
        """Long maximal induced path (at least 7 vertices)."""
        self.stats.case_b += 1
        g, k = inst.graph, inst.k
        dec = build_decomposition(g, path)
        if self._full:
            problems = validate_decomposition(g, dec)
            if problems:
                raise StructureViolation(str(problems[0]))
            if self._chair_free:
                chair_component_dominators(g, dec)
                self.stats.chair_checks += 1
        fat, sep, rem = dec.fat_mask, dec.separator_mask, dec.remainder_mask
        rem_comps = g.components_mask(rem)
        groups = None
        if self._full:
            groups = {v: 0 for v in iter_bits(sep)}
            for t, c in enumerate(rem_comps, 1):
                groups.update((v, t) for v in iter_bits(c))
        allc = (1 << k) - 1
        best, branches = None, 0
        for colors in subset_order(k):
            forb = {v: allc & ~colors for v in iter_bits(fat)}
            forb.update((v, colors) for v in iter_bits(sep))
            inst_c = inst.with_forbidden(forb)
            fat_part = self._solve_fat_part(inst_c, dec)
            for reps in case_b_guesses(inst_c, sep, rem):
                branches += 1
                self._count(branches)
                sub = apply_forbiddings_b(inst_c, sep, rem, reps)
                if groups is not None:
                    self.stats.disjoint_checks += 1
                    bad = disjoint_lists_violations(sub, groups)
                    if bad:
                        self.stats.disjoint_failures += 1
                        raise InvariantViolation(f"separator/remainder edges {bad} share positive colors")
                cand = self._solve_parts(inst, sub, [sep] + rem_comps, [fat_part])
                if best is None or cand.value > best.value:
                    best = cand
        self.stats.case_b_branches += branches
        return best

    def _solve_fat_part(self, inst: Instance, dec: FatDecomposition) -> tuple[Solution, tuple[int, ...]]:
        sub, verts = inst.restrict_mask(dec.fat_mask)
        pos = {old: new for new, old in enumerate(verts)}
        parts = [to_mask(pos[v] for v in p) for p in dec.parts]
        return solve_fat(sub, parts, dec.kind, self._solve, check=self._full), verts

    # -- clique branching ------------------------------------------------------

    def solve_subexponential(self, inst: Instance) -> Solution:
        """Branch on a large clique while one exists, else run the main recursion."""
        key = inst.key
        hit = self._subexp_memo.get(key)
        if hit is not None:
            self.stats.memo_hits += 1
            return hit
        sol = self._subexp(inst)
        self._subexp_memo[key] = sol
        return sol

    def _subexp(self, inst: Instance) -> Solution:
        self.stats.subexp_nodes += 1
        g, k = inst.graph, inst.k
        n = g.n
        if n <= 2:
            return self._solve(inst)
        clique = find_clique(g, subexp_threshold(n))
        if clique is None:
            return self._solve(inst)
        kmask = to_mask(clique)
        options = [[None] + [c for c in range(k) if inst.rev[u][c]] for u in clique]
        best, branches = None, 0
        for colors in itertools.product(*options):
            picked = [c for c in colors if c is not None]
            if len(set(picked)) != len(picked):
                continue
            branches += 1
            self._count(branches)
            forb: dict[int, int] = {}
            colored = {}
            for u, c in zip(clique, colors):
                if c is None:
                    continue
                colored[u] = c
                for w in iter_bits(g.row(u) & ~kmask):
                    forb[w] = forb.get(w, 0) | 1 << c
            head = Solution(colored, Fraction(sum(inst.rev[u][c] for u, c in colored.items())))
            sub, verts = inst.with_forbidden(forb).restrict_mask(g.full_mask & ~kmask)
            cand = merge_solutions(inst, [(head, range(n)), (self.solve_subexponential(sub), verts)])
            if best is None or cand.value > best.value:
                best = cand
        self.stats.subexp_branches += branches
        return best


def solve(inst: Instance, config: SolverConfig | None = None) -> Solution:
    """Maximum-value solution of ``inst`` (see :class:`Solver`)."""
    return Solver(config).solve(inst)


def solve_subexponential(inst: Instance, config: SolverConfig | None = None) -> Solution:
    solver = Solver(config)
    if solver._full and inst.n:
        m = class_membership(inst.graph)
        solver._chair_free = m.bull_free and m.chair_free
    return solver.solve_subexponential(inst)

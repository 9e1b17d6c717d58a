"""
Deliberately naive reference implementations used to cross-check the library.

Nothing here imports the solver; the only shared piece is the Graph type.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def adjacency(g) -> list[set[int]]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def clique_number_naive(g) -> int:
    adj = adjacency(g)
    best = 0
    for size in range(1, g.n + 1):
        found = any(all(b in adj[a] for a, b in combinations(s, 2)) for s in combinations(range(g.n), size))
        if not found:
            break
        best = size
    return best


def induced_naive(g, pattern_graph) -> bool:
    """Does ``g`` contain ``pattern_graph`` as an induced subgraph?"""
    h = pattern_graph
    hadj = adjacency(h)
    gadj = adjacency(g)
    want = sorted(len(a) for a in hadj)
    for sub in combinations(range(g.n), h.n):
        # cheap necessary condition before trying every bijection
        if sorted(len(gadj[v] & set(sub)) for v in sub) != want:
            continue
        for perm in permutations(sub):
            if all((perm[y] in gadj[perm[x]]) == (y in hadj[x]) for x in range(h.n) for y in range(x + 1, h.n)):
                return True
    return False


def best_coloring_of(rev, adj, verts, k):
    """Best proper coloring of all of ``verts`` (None if impossible)."""
    best = None
    for colors in product(range(k), repeat=len(verts)):
        if any(rev[v][c] == 0 for v, c in zip(verts, colors)):
            continue
        ok = all(
            colors[a] != colors[b]
            for a in range(len(verts))
            for b in range(a + 1, len(verts))
            if verts[b] in adj[verts[a]]
        )
        if ok:
            val = sum(Fraction(rev[v][c]) for v, c in zip(verts, colors))
            if best is None or val > best:
                best = val
    return best


def partial_coloring_by_subsets(g, k, rev) -> Fraction:
    """Max over X of the best proper coloring of G[X]; independent of the oracle module."""
    adj = adjacency(g)
    best = Fraction(0)
    for size in range(1, g.n + 1):
        for xs in combinations(range(g.n), size):
            val = best_coloring_of(rev, adj, list(xs), k)
            if val is not None and val > best:
                best = val
    return best


def mwis(g, weights) -> Fraction:
    adj = adjacency(g)
    best = Fraction(0)
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(b not in adj[a] for a, b in combinations(vs, 2)):
            best = max(best, sum((Fraction(weights[v]) for v in vs), Fraction(0)))
    return best


def list_colorable_naive(g, lists) -> bool:
    adj = adjacency(g)
    choices = [sorted(lists.get(v, ())) for v in range(g.n)]
    for colors in product(*choices):
        if all(colors[u] != colors[v] for u in range(g.n) for v in adj[u] if u < v):
            return True
    return False

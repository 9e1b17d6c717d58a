"""
Quickstart: build an instance, solve it, check it against brute force.
"""

from fractions import Fraction

from partialcol import Instance, SolverConfig, brute_force, class_membership, cycle_graph, solve
from partialcol.graph import Graph

# A 7-cycle plus a vertex seeing three consecutive cycle vertices.
g = Graph(8, cycle_graph(7).edges() + [(7, 0), (7, 1), (7, 2)])
print("membership:", class_membership(g))

# Revenues: rows are vertices, columns are colors. Zero means forbidden.
rev = [
    (3, 1),
    (0, 4),
    (2, 2),
    (5, 0),
    (1, 1),
    (Fraction(7, 2), 1),
    (2, 6),
    (4, 4),
]
inst = Instance(g, 2, tuple(rev))

# n0 is the brute-force threshold; a small value forces the recursion to work.
sol = solve(inst, SolverConfig(n0=4, assert_level="full"))
print("optimum:", sol.value)
print("coloring (vertex -> color):", dict(sorted(sol.coloring.items())))

# The oracle enumerates every partial coloring and agrees exactly.
assert brute_force(inst).value == sol.value
print("brute force agrees")

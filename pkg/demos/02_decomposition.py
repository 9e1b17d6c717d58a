"""
The long-path structure: a fat cycle with a dominating vertex and a pendant.

Vertices 0..7 form an 8-cycle, vertex 8 sees the whole cycle and vertex 9
hangs off vertex 8.  Starting from the induced path 0..6, the eighth cycle
vertex closes it into a cycle, vertex 8 becomes the separator and vertex 9
the remainder.
"""

from partialcol import class_membership, cycle_graph
from partialcol.decompose import build_decomposition, chair_component_dominators, validate_decomposition
from partialcol.graph import Graph
from partialcol.gyarfas import gyarfas_path, max_component_outside

edges = cycle_graph(8).edges() + [(v, 8) for v in range(8)] + [(8, 9)]
g = Graph(10, edges)
print("in (bull, E)-free class:", class_membership(g).in_bull_e_class)

dec = build_decomposition(g, list(range(7)))
print("kind:", dec.kind, "order:", dec.order)
print("parts:", [sorted(p) for p in dec.parts])
print("separator:", sorted(dec.separator), "remainder:", sorted(dec.remainder))
print("violations:", validate_decomposition(g, dec))
print("remainder component dominators:", chair_component_dominators(g, dec))

# The path the solver itself builds from vertex 9 stays short: vertex 8
# already dominates everything, so nothing big is left outside N[P].
p = gyarfas_path(g, 9)
print("path from 9:", p, "largest outside component:", max_component_outside(g, p))

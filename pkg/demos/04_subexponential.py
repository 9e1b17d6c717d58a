"""
Clique branching: how the threshold grows and what it costs on co-bipartite graphs.
"""

import time

import numpy as np

from partialcol import Instance, SolverConfig, solve, solve_subexponential
from partialcol.solver import Solver, subexp_threshold
from partialcol.workbench import GenSpec, gen_graph, gen_revenue

for n in (4, 9, 16, 25, 36, 64):
    print(f"n={n:3d} clique threshold {subexp_threshold(n)}")

# Complements of bipartite graphs contain big cliques, so the wrapper branches.
rows = []
for seed in range(5):
    g = gen_graph(GenSpec(family="co-bipartite", n=14, p=0.4, seed=seed, class_filter=None))
    inst = Instance(g, 2, gen_revenue(g.n, 2, 9, 0.2, [seed, 1]))
    cfg = SolverConfig(n0=6)
    t0 = time.perf_counter()
    a = solve(inst, cfg).value
    t1 = time.perf_counter()
    s = Solver(cfg)
    b = s.solve_subexponential(inst).value
    t2 = time.perf_counter()
    assert a == b
    rows.append((seed, a, 1000 * (t1 - t0), 1000 * (t2 - t1), s.stats.subexp_branches))

print("seed  value  main_ms  subexp_ms  branches")
for seed, val, ma, mb, br in rows:
    print(f"{seed:4d}  {str(val):>5}  {ma:7.1f}  {mb:9.1f}  {br:8d}")
print("mean ratio subexp/main:", np.mean([r[3] / r[2] for r in rows]).round(2))

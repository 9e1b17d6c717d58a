"""
Differential testing against brute force, and what a caught bug looks like.

The first run uses the real solver.  The second swaps in a broken solver that
ignores every revenue above 5, so the driver reports mismatches and shrinks
each one to a small reproducer.
"""

import tempfile

from partialcol import Instance, solve, solve_subexponential
from partialcol.workbench import Envelope, differential_run, read_instance

env = Envelope(n_max=9, k_max=2, class_filter="chair", assert_level="full")
report = differential_run(100, env, seed=1)
print(f"real solver: {report.count} instances, {len(report.mismatches)} mismatches, {report.elapsed:.2f}s")
print("short-path nodes:", report.stats.case_a, "long-path nodes:", report.stats.case_b)


def capped(inst, cfg):
    rev = tuple(tuple(x if x <= 5 else 0 for x in row) for row in inst.rev)
    clipped = Instance(inst.graph, inst.k, rev)
    return solve(clipped, cfg).value, solve_subexponential(inst, cfg).value, None


with tempfile.TemporaryDirectory() as out:
    report = differential_run(20, env, seed=1, solver=capped, workers=1, out_dir=out)
    print(f"broken solver: {len(report.mismatches)} mismatches")
    first = report.mismatches[0]
    print(f"  instance {first.index}: oracle {first.oracle}, solver {first.solve}, "
          f"{first.n} vertices shrunk to {first.shrunk_n}")
    small = read_instance(*first.reproducer)
    print("  reproducer revenues:", small.rev)

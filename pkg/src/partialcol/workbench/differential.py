"""
Differential testing of the solvers against the brute-force oracle.

Instance ``i`` of a run with seed ``s`` is generated from
``numpy.random.default_rng([s, i])``, so results do not depend on how
instances are scheduled across workers.  Any disagreement (or exception) is
shrunk by greedy vertex deletion and written out as a graph file plus a
revenue file.
"""

from __future__ import annotations

import os
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..instance import Instance
from ..oracle import brute_force
from ..solver import Solver, SolverConfig, SolverStats, solve_subexponential
from .fileio import write_graph, write_revenue
from .generators import GenSpec, gen_instance

WORKERS_ENV = "PARTIALCOL_WORKERS"


@dataclass(frozen=True)
class Envelope:
    """Which instances a run draws: sizes, colors, revenues and families."""

    n_max: int = 9
    k_min: int = 1
    k_max: int = 2
    class_filter: str | None = "E"
    max_value: int = 9
    zero_fraction: float = 0.3
    n0: int = 4
    assert_level: str = "cheap"
    families: tuple[str, ...] = ("random-class", "fat-path", "fat-cycle", "co-bipartite", "attached")


def envelope_spec(env: Envelope, seed: int, index: int) -> GenSpec:
    """Generator spec of instance ``index``; sizes always stay within ``n_max``."""
    rng = np.random.default_rng([seed, index])
    family = env.families[index % len(env.families)]
    k = int(rng.integers(env.k_min, env.k_max + 1))
    p = float(rng.choice([0.15, 0.3, 0.5, 0.7]))
    common = dict(class_filter=env.class_filter, seed=int(rng.integers(2**63)), k=k,
                  max_value=env.max_value, zero_fraction=env.zero_fraction, p=p)
    n = int(rng.integers(max(1, min(5, env.n_max)), env.n_max + 1))
    if family in ("fat-path", "fat-cycle", "attached") and env.n_max >= 7:
        cycle = family == "fat-cycle" or (family == "attached" and rng.random() < 0.5)
        order = 8 if cycle else 7
        if env.n_max < order:
            cycle, order = False, 7
        budget = env.n_max - order
        if family == "attached" and budget >= 1:
            sep = int(rng.integers(1, min(2, budget) + 1))
            rem = int(rng.integers(0, budget - sep + 1))
        else:
            sep = rem = 0
        extra = budget - sep - rem
        parts = [1] * order
        for t in rng.choice(order, size=int(rng.integers(0, extra + 1)), replace=False):
            parts[int(t)] = 2
        return GenSpec(family="fat-cycle" if cycle else "fat-path", parts=tuple(parts),
                       separator=sep, remainder=rem, **common)
    if family not in ("random-class", "co-bipartite"):
        family = "random-class"
    return GenSpec(family=family, n=n, **common)


@dataclass
class Mismatch:
    index: int
    n: int
    oracle: str
    solve: str
    subexp: str
    error: str | None = None
    shrunk_n: int | None = None
    reproducer: tuple[str, str] | None = None


@dataclass
class DiffReport:
    count: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    stats: SolverStats = field(default_factory=SolverStats)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches


# (main value, subexponential value, stats or None)
SolveFn = Callable[[Instance, SolverConfig], tuple]


def default_solvers(inst: Instance, cfg: SolverConfig):
    """Values of the main recursion and the subexponential wrapper, plus stats."""
    main = Solver(cfg)
    a = main.solve(inst).value
    b = solve_subexponential(inst, cfg).value
    return a, b, main.stats


def _merge_stats(into: SolverStats, other: SolverStats | None) -> None:
    if other is None:
        return
    for name in vars(into):
        setattr(into, name, getattr(into, name) + getattr(other, name))


def _evaluate(inst: Instance, cfg: SolverConfig, solver: SolveFn):
    truth = brute_force(inst).value
    try:
        a, b, stats = solver(inst, cfg)
    except Exception as exc:  # any crash counts as a disagreement
        return truth, None, None, f"{type(exc).__name__}: {exc}", SolverStats()
    return truth, a, b, None, stats


def _fails(inst: Instance, cfg: SolverConfig, solver: SolveFn) -> bool:
    truth, a, b, err, _ = _evaluate(inst, cfg, solver)
    return err is not None or a != truth or b != truth


def shrink(inst: Instance, fails: Callable[[Instance], bool]) -> Instance:
    """Delete vertices one at a time while the failure persists."""
    changed = True
    while changed:
        changed = False
        for v in range(inst.n):
            smaller, _ = inst.restrict_mask(inst.graph.full_mask & ~(1 << v))
            if fails(smaller):
                inst, changed = smaller, True
                break
    return inst


def _check_one(args):
    env, seed, index, solver = args
    cfg = SolverConfig(n0=env.n0, assert_level=env.assert_level)
    inst = gen_instance(envelope_spec(env, seed, index))
    truth, a, b, err, stats = _evaluate(inst, cfg, solver)
    if err is None and a == truth and b == truth:
        return index, None, stats
    bad = Mismatch(index, inst.n, str(truth), str(a), str(b), err)
    small = shrink(inst, lambda x: _fails(x, cfg, solver))
    return index, (bad, small), stats


def differential_run(
    count: int,
    envelope: Envelope | None = None,
    seed: int = 0,
    *,
    solver: SolveFn = default_solvers,
    workers: int | None = None,
    out_dir=None,
) -> DiffReport:
    """Compare ``solver`` with the oracle on ``count`` generated instances.

    ``workers`` defaults to the ``PARTIALCOL_WORKERS`` environment variable
    (1 if unset); ``solver`` must be picklable when more than one worker is
    used.  Shrunk reproducers go to ``out_dir`` when given.
    """
    env = envelope or Envelope()
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    start = time.perf_counter()
    report = DiffReport(count=count)
    jobs = [(env, seed, i, solver) for i in range(count)]
    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, jobs, chunksize=4))
    else:
        results = [_check_one(j) for j in jobs]
    for index, bad, stats in sorted(results, key=lambda r: r[0]):
        _merge_stats(report.stats, stats)
        if bad is None:
            continue
        mismatch, small = bad
        mismatch.shrunk_n = small.n
        if out_dir is not None:
            out = Path(out_dir)
            out.mkdir(parents=True, exist_ok=True)
            gpath, rpath = out / f"mismatch_{seed}_{index}.graph", out / f"mismatch_{seed}_{index}.rev.json"
            write_graph(gpath, small.graph, comment=f"differential mismatch seed={seed} index={index}")
            write_revenue(rpath, small)
            mismatch.reproducer = (str(gpath), str(rpath))
        report.mismatches.append(mismatch)
    report.elapsed = time.perf_counter() - start
    return report

"""
Command-line interface: ``partialcol <command> ...``.

Exit codes: 0 success, 1 input/format error or differential mismatch,
2 class violation (a witness is printed), 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from ..errors import ClassViolation, InputError, ResourceLimitError
from ..graph import Graph
from ..gyarfas import extend_maximal, first_noncentral_vertex, is_induced_path, recursion_path
from ..instance import Instance
from ..oracle import brute_force
from ..patterns import class_membership
from ..solver import Solver, SolverConfig
from .differential import Envelope, differential_run
from .fileio import read_graph, read_revenue, solution_document, write_graph, write_revenue, write_solution
from .generators import FAMILIES, NAMED, GenSpec, gen_graph, gen_revenue

EXIT_INPUT, EXIT_CLASS, EXIT_RESOURCE = 1, 2, 3
CLI_MODES = {"auto": "auto", "subexp": "subexponential", "oracle": "oracle"}


def _one_based(emb: dict[int, int]) -> list[int]:
    return [emb[x] + 1 for x in sorted(emb)]


def _print_witness(g: Graph, out=None) -> None:
    out = out or sys.stderr
    m = class_membership(g)
    for name, emb in m.witnesses.items():
        print(f"witness {name}: {' '.join(map(str, _one_based(emb)))}", file=out)


def _load_instance(args) -> Instance:
    g = read_graph(args.graph)
    k, rev = read_revenue(args.revenue)
    if args.k is not None and args.k != k:
        if args.k > k:
            raise InputError(f"--k {args.k} exceeds the {k} colors in the revenue file")
        rev = tuple(row[: args.k] for row in rev)
        k = args.k
    if len(rev) != g.n:
        raise InputError(f"revenue has {len(rev)} rows for {g.n} vertices")
    return Instance(g, k, rev)


def _emit_solution(sol, out) -> None:
    if out:
        write_solution(out, sol)
    print(json.dumps(solution_document(sol)))


def cmd_solve(args) -> int:
    inst = _load_instance(args)
    mode = CLI_MODES[args.mode]
    if mode != "oracle":
        m = class_membership(inst.graph)
        if not (m.in_bull_chair_class or m.in_bull_e_class):
            print("graph is neither (bull, chair)-free nor (bull, E)-free", file=sys.stderr)
            _print_witness(inst.graph)
            return EXIT_CLASS
    cfg = SolverConfig(n0=args.n0, branch_cap=args.branch_cap, assert_level=args.assert_level, mode=mode)
    sol = Solver(cfg).solve(inst)
    _emit_solution(sol, args.out)
    return 0


def cmd_oracle(args) -> int:
    inst = _load_instance(args)
    _emit_solution(brute_force(inst, limit=args.limit), args.out)
    return 0


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    m = class_membership(g)
    print(f"bull_free {str(m.bull_free).lower()}")
    print(f"chair_free {str(m.chair_free).lower()}")
    print(f"e_free {str(m.e_free).lower()}")
    for name, emb in m.witnesses.items():
        print(f"witness {name}: {' '.join(map(str, _one_based(emb)))}")
    return 0


def cmd_decompose(args) -> int:
    from ..decompose import build_decomposition, largest_remainder_component, validate_decomposition

    g = read_graph(args.graph)
    if not g.is_connected():
        raise InputError("decompose needs a connected graph")
    if args.path:
        seed_path = [int(x) - 1 for x in args.path.split(",")]
        if not is_induced_path(g, seed_path):
            raise InputError("--path is not an induced path")
        path = extend_maximal(g, seed_path)
    else:
        v = args.start - 1 if args.start is not None else first_noncentral_vertex(g)
        if v is None:
            print("graph is complete; no path to build")
            return 0
        path = recursion_path(g, v)
    print(f"path {' '.join(str(x + 1) for x in path)}")
    if len(path) < 7:
        print(f"path has {len(path)} vertices; short-path case, no fat decomposition")
        return 0
    dec = build_decomposition(g, path)
    print(f"kind {dec.kind}")
    print(f"r {dec.order}")
    print(f"part_sizes {' '.join(str(len(p)) for p in dec.parts)}")
    print(f"D {len(dec.separator)}")
    print(f"T {len(dec.remainder)}")
    print(f"largest_T_component {largest_remainder_component(g, dec)}")
    problems = validate_decomposition(g, dec)
    print("validation ok" if not problems else f"validation failed: {len(problems)} violations")
    for p in problems:
        print(f"  {p.check}: {p.detail}")
    return 0


def _spec_from_args(args, seed: int, family: str | None = None, n: int | None = None, k: int | None = None) -> GenSpec:
    parts = tuple(int(x) for x in args.parts.split(",")) if getattr(args, "parts", None) else None
    return GenSpec(
        family=family or args.family,
        n=n if n is not None else args.n,
        p=args.p,
        class_filter=None if args.filter == "none" else args.filter,
        seed=seed,
        k=k if k is not None else args.k,
        max_value=args.max_value,
        zero_fraction=args.zero_fraction,
        name=getattr(args, "name", None),
        order=getattr(args, "order", 7),
        parts=parts,
        separator=getattr(args, "separator", 0),
        remainder=getattr(args, "remainder", 0),
    )


def cmd_gen(args) -> int:
    spec = _spec_from_args(args, args.seed)
    g = gen_graph(spec)
    rev = gen_revenue(g.n, spec.k, spec.max_value, spec.zero_fraction, [spec.seed, 1], min_value=args.min_value)
    comment = f"family={spec.family} n={spec.n} p={spec.p} filter={args.filter} seed={spec.seed}"
    if args.graph_out:
        write_graph(args.graph_out, g, comment=comment)
    else:
        from .fileio import format_graph

        sys.stdout.write(format_graph(g, comment))
    if args.revenue_out:
        write_revenue(args.revenue_out, Instance(g, spec.k, rev))
    return 0


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "n", "k", "seed", "mode", "value", "millis"])
    for family in args.families.split(","):
        for n in (int(x) for x in args.sizes.split(",")):
            for k in (int(x) for x in args.ks.split(",")):
                for s in range(args.seeds):
                    seed = args.seed + s
                    spec = _spec_from_args(args, seed, family=family, n=n, k=k)
                    g = gen_graph(spec)
                    rev = gen_revenue(g.n, k, spec.max_value, spec.zero_fraction, [seed, 1])
                    inst = Instance(g, k, rev)
                    for mode in args.modes.split(","):
                        cfg = SolverConfig(n0=args.n0, mode=CLI_MODES[mode], assert_level="cheap")
                        t0 = time.perf_counter()
                        val = Solver(cfg).solve(inst).value
                        ms = (time.perf_counter() - t0) * 1000
                        writer.writerow([family, g.n, k, seed, mode, str(val), f"{ms:.2f}"])
    return 0


def cmd_diff(args) -> int:
    env = Envelope(n_max=args.n_max, k_min=args.k_min, k_max=args.k_max,
                   class_filter=None if args.filter == "none" else args.filter,
                   n0=args.n0, assert_level=args.assert_level)
    report = differential_run(args.count, env, args.seed, out_dir=args.out_dir)
    print(f"instances {report.count} mismatches {len(report.mismatches)} seconds {report.elapsed:.1f}")
    for mm in report.mismatches:
        where = f" reproducer {mm.reproducer[0]}" if mm.reproducer else ""
        print(f"  index {mm.index}: oracle {mm.oracle} solve {mm.solve} subexp {mm.subexp}"
              f" shrunk_n {mm.shrunk_n}{' error ' + mm.error if mm.error else ''}{where}")
    return 0 if report.ok else EXIT_INPUT


def _instance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="graph file (p n m / e u v)")
    p.add_argument("--revenue", required=True, help="revenue JSON file")
    p.add_argument("--k", type=int, help="use only the first k colors")
    p.add_argument("--out", help="write the solution JSON here")


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n0", type=int, default=8, help="brute-force threshold (default 8)")
    p.add_argument("--assert", dest="assert_level", choices=("off", "cheap", "full"), default="cheap")
    p.add_argument("--branch-cap", type=int, default=10**8)


def _gen_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, default="random-class")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--filter", choices=("E", "chair", "none"), default="E")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-value", type=int, default=9)
    p.add_argument("--zero-fraction", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partialcol", description="Exact Max Partial k-Coloring toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance exactly")
    _instance_flags(p)
    _solver_flags(p)
    p.add_argument("--mode", choices=tuple(CLI_MODES), default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute-force optimum")
    _instance_flags(p)
    _solver_flags(p)
    p.add_argument("--limit", type=int, default=16, help="refuse instances above this many vertices")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="bull/chair/E membership with witnesses")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="recursion path and fat decomposition")
    p.add_argument("--graph", required=True)
    p.add_argument("--start", type=int, help="first path vertex (1-indexed)")
    p.add_argument("--path", help="comma-separated induced path (1-indexed), extended to a maximal one")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="emit a generated graph and revenue table")
    _gen_flags(p)
    p.add_argument("--name", choices=tuple(NAMED), help="graph for --family named")
    p.add_argument("--order", type=int, default=7)
    p.add_argument("--parts", help="comma-separated fat part sizes")
    p.add_argument("--separator", type=int, default=0)
    p.add_argument("--remainder", type=int, default=0)
    p.add_argument("--min-value", type=int, default=0)
    p.add_argument("--graph-out")
    p.add_argument("--revenue-out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="CSV timing table over a sweep")
    _gen_flags(p)
    p.add_argument("--families", default="random-class,co-bipartite")
    p.add_argument("--sizes", default="8,12,16")
    p.add_argument("--ks", default="2")
    p.add_argument("--seeds", type=int, default=3, help="seeds per cell, starting at --seed")
    p.add_argument("--modes", default="auto,subexp")
    p.add_argument("--n0", type=int, default=8)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("diff", help="differential run against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--filter", choices=("E", "chair", "none"), default="E")
    p.add_argument("--n0", type=int, default=4)
    p.add_argument("--assert", dest="assert_level", choices=("off", "cheap", "full"), default="cheap")
    p.add_argument("--out-dir", help="directory for shrunk reproducers")
    p.set_defaults(func=cmd_diff)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClassViolation as exc:
        print(f"class violation: {exc}", file=sys.stderr)
        graph = getattr(args, "graph", None)
        if graph:
            _print_witness(read_graph(graph))
        return EXIT_CLASS
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

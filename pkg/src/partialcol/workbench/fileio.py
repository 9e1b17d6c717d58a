"""
Text formats for graphs, revenue tables and solutions.

Graph files::

    c optional comments
    p <n> <m>
    e <u> <v>        (m lines, 1-indexed endpoints)

Revenue and solution files are JSON.  Revenues are integers or ``"p/q"``
strings (lowest terms); colors and vertices are 1-indexed on disk.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from ..errors import GraphFormatError
from ..graph import Graph
from ..instance import Instance, Solution, as_rational, make_solution


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"c {line}" for line in comment.splitlines()]
    edges = g.edges()
    lines.append(f"p {g.n} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            nums = tok[2:] if len(tok) == 4 else tok[1:]
            try:
                n, m = (int(x) for x in nums)
            except ValueError:
                raise GraphFormatError(f"malformed problem line {raw.strip()!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative sizes", lineno)
        elif tok[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except (IndexError, ValueError):
                raise GraphFormatError(f"malformed edge line {raw.strip()!r}", lineno) from None
            if len(tok) != 3:
                raise GraphFormatError(f"malformed edge line {raw.strip()!r}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != m:
        raise GraphFormatError(f"problem line announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(path, g: Graph, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))


def rational_to_json(x) -> int | str:
    q = Fraction(x)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_from_json(x) -> int | Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise GraphFormatError(f"revenue {x!r} must be an integer or a 'p/q' string")
    try:
        return as_rational(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"bad revenue {x!r}: {exc}") from None


def revenue_document(inst: Instance) -> dict:
    return {"k": inst.k, "rev": [[rational_to_json(x) for x in row] for row in inst.rev]}


def parse_revenue(doc: dict) -> tuple[int, tuple[tuple, ...]]:
    try:
        k = doc["k"]
        rows = doc["rev"]
    except (KeyError, TypeError):
        raise GraphFormatError("revenue document needs 'k' and 'rev'") from None
    if not isinstance(k, int) or k < 1:
        raise GraphFormatError(f"k must be a positive integer, got {k!r}")
    table = []
    for v, row in enumerate(rows):
        if len(row) != k:
            raise GraphFormatError(f"revenue row {v + 1} has {len(row)} entries, expected {k}")
        table.append(tuple(rational_from_json(x) for x in row))
    return k, tuple(table)


def read_revenue(path) -> tuple[int, tuple[tuple, ...]]:
    return parse_revenue(json.loads(Path(path).read_text()))


def write_revenue(path, inst: Instance) -> None:
    Path(path).write_text(json.dumps(revenue_document(inst), indent=1) + "\n")


def read_instance(graph_path, revenue_path) -> Instance:
    g = read_graph(graph_path)
    k, rev = read_revenue(revenue_path)
    if len(rev) != g.n:
        raise GraphFormatError(f"revenue has {len(rev)} rows for {g.n} vertices")
    return Instance(g, k, rev)


def solution_document(sol: Solution) -> dict:
    return {
        "value": str(sol.value),
        "colored": [{"vertex": v + 1, "color": c + 1} for v, c in sorted(sol.coloring.items())],
    }


def parse_solution(doc: dict, inst: Instance) -> Solution:
    """Solution from its document, validated strictly against ``inst``."""
    coloring = {int(e["vertex"]) - 1: int(e["color"]) - 1 for e in doc["colored"]}
    sol = make_solution(inst, coloring)
    if Fraction(doc["value"]) != sol.value:
        raise GraphFormatError(f"stated value {doc['value']} differs from computed {sol.value}")
    return sol


def write_solution(path, sol: Solution) -> None:
    Path(path).write_text(json.dumps(solution_document(sol), indent=1) + "\n")


def read_solution(path, inst: Instance) -> Solution:
    return parse_solution(json.loads(Path(path).read_text()), inst)

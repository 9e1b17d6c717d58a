"""Exact Max Partial k-Coloring on (bull, chair)-free and (bull, E)-free graphs."""

from .errors import (
    ClassViolation,
    GraphFormatError,
    InputError,
    InvariantViolation,
    ResourceLimitError,
    StructureViolation,
    ValidationError,
)
from .graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from .instance import (
    Instance,
    Solution,
    forbid_color,
    from_list_coloring,
    is_list_colorable,
    make_solution,
    merge_solutions,
    subinstance,
    value,
)
from .oracle import brute_force
from .patterns import BULL, CHAIR, E, class_membership, find_induced
from .solver import Solver, SolverConfig, solve, solve_complete, solve_subexponential

__version__ = "0.1.0"

__all__ = [
    "BULL",
    "CHAIR",
    "E",
    "ClassViolation",
    "Graph",
    "GraphFormatError",
    "InputError",
    "Instance",
    "InvariantViolation",
    "ResourceLimitError",
    "Solution",
    "Solver",
    "SolverConfig",
    "StructureViolation",
    "ValidationError",
    "brute_force",
    "class_membership",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "find_induced",
    "forbid_color",
    "from_list_coloring",
    "is_list_colorable",
    "make_solution",
    "merge_solutions",
    "path_graph",
    "solve",
    "solve_complete",
    "solve_subexponential",
    "star_graph",
    "subinstance",
    "value",
]

"""Generators, file formats and the differential-testing driver."""

from .differential import DiffReport, Envelope, differential_run, envelope_spec, shrink
from .fileio import (
    format_graph,
    parse_graph,
    read_graph,
    read_instance,
    read_revenue,
    read_solution,
    write_graph,
    write_revenue,
    write_solution,
)
from .generators import FatLayout, GenSpec, fat_layout, gen_graph, gen_instance, gen_revenue

__all__ = [
    "DiffReport",
    "Envelope",
    "FatLayout",
    "GenSpec",
    "differential_run",
    "envelope_spec",
    "fat_layout",
    "format_graph",
    "gen_graph",
    "gen_instance",
    "gen_revenue",
    "parse_graph",
    "read_graph",
    "read_instance",
    "read_revenue",
    "read_solution",
    "shrink",
    "write_graph",
    "write_revenue",
    "write_solution",
]

"""Parameterized directed feedback vertex set via ordered multicut in DAGs."""
from .dfvs import build_auxiliary_instance, compression_step, entering_edge_set, is_dfvs, replace_dfvs, solve_dfvs
from .graph import DiGraph, GraphError, UnknownVertexError
from .ordmc import (IllegalInstanceError, SearchStats, TerminalSystem, check_ordered_separation, find_cut,
                    normalize_terminals, solve_ordmc)
from .separator import INFINITE, SeparatorResult, min_vertex_separator, separator_size_after_bypass

__all__ = [
    "DiGraph", "GraphError", "UnknownVertexError",
    "INFINITE", "SeparatorResult", "min_vertex_separator", "separator_size_after_bypass",
    "IllegalInstanceError", "SearchStats", "TerminalSystem", "check_ordered_separation", "find_cut",
    "normalize_terminals", "solve_ordmc",
    "build_auxiliary_instance", "compression_step", "entering_edge_set", "is_dfvs", "replace_dfvs",
    "solve_dfvs",
]

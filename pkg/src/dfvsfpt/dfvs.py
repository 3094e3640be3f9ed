"""Directed feedback vertex set by iterative compression.

Vertices are inserted in ascending id order while a DFVS of size at most
``k`` is maintained.  When it would grow to ``k + 1`` the compression step
guesses the part ``F`` that survives and asks ``replace_dfvs`` for a strictly
smaller DFVS disjoint from the rest.  ``replace_dfvs`` reduces to ordered
multicut instances, one per ordering of the set being replaced.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .graph import DiGraph, Edge, GraphError
from .ordmc import SearchStats, TerminalSystem, find_cut


class NotADfvsError(GraphError):
    pass


def is_dfvs(g: DiGraph, s: Iterable[int]) -> bool:
    return g.remove_vertices(s).is_acyclic()


def entering_edge_set(g: DiGraph, s: Iterable[int]) -> set[Edge]:
    return {(u, v) for v in set(s) for u in g.predecessors(v)}


def build_auxiliary_instance(g: DiGraph, ordering: Sequence[int]) -> tuple[DiGraph, TerminalSystem]:
    """Ordered multicut instance whose solutions are the DFVSs disjoint from ``ordering``.

    Edges entering the set are removed.  For each ``s_i`` a fresh sink
    ``t_i`` receives an edge from every outside vertex that reaches ``s_i``
    through entering edges only.
    """
    s = set(ordering)
    if len(s) != len(ordering) or not ordering:
        raise GraphError("ordering must list a nonempty set without repeats")
    for v in ordering:
        if v not in g:
            raise GraphError(f"unknown vertex {v}")
    es = entering_edge_set(g, s)
    aux = g.remove_edges(es)
    if not aux.is_acyclic():
        raise NotADfvsError("removing edges entering the set leaves a cycle")
    es_graph = g.edge_subgraph(es)
    sinks = []
    for v in ordering:
        sources = es_graph.co_reachable_to([v]) - s if v in es_graph else set()
        t = aux.add_vertex()
        for w in sources:
            aux.add_edge(w, t)
        sinks.append(t)
    return aux, TerminalSystem(ordering, sinks)


def replace_dfvs(g: DiGraph, s: Iterable[int],
                 stats: SearchStats | None = None) -> frozenset[int] | None:
    """A DFVS of ``g`` disjoint from ``s`` and smaller than it, or ``None``."""
    s = set(s)
    if not is_dfvs(g, s):
        raise NotADfvsError("s is not a DFVS of g")
    if g.is_acyclic():
        return frozenset()
    # a cycle inside s cannot be hit by a set avoiding s
    if not g.induced_subgraph(s).is_acyclic():
        return None
    stats = stats if stats is not None else SearchStats()
    for ordering in itertools.permutations(sorted(s)):
        stats.orderings += 1
        aux, terminals = build_auxiliary_instance(g, ordering)
        found = find_cut(aux, terminals, len(s) - 1, stats)
        if found is not None:
            return found
    return None


def compression_step(g: DiGraph, s_prime: Iterable[int], k: int,
                     stats: SearchStats | None = None) -> frozenset[int] | None:
    """Shrink a DFVS of size ``k + 1`` to one of size at most ``k``."""
    s_prime = sorted(s_prime)
    if len(s_prime) != k + 1:
        raise GraphError(f"expected a set of size k+1={k + 1}, got {len(s_prime)}")
    if not is_dfvs(g, s_prime):
        raise NotADfvsError("s_prime is not a DFVS of g")
    # keeping all of s_prime would exceed k
    for size in range(k + 1):
        for kept in itertools.combinations(s_prime, size):
            rest = set(s_prime).difference(kept)
            found = replace_dfvs(g.remove_vertices(kept), rest, stats)
            if found is not None:
                return frozenset(kept) | found
    return None


def solve_dfvs(g: DiGraph, k: int) -> tuple[frozenset[int] | None, SearchStats]:
    """DFVS of size at most ``k`` or ``None``, plus counters summed over all searches."""
    if k < 0:
        raise GraphError(f"negative parameter k={k}")
    stats = SearchStats()
    order = sorted(g)
    current: frozenset[int] = frozenset()
    for i, v in enumerate(order, 1):
        g_i = g.induced_subgraph(order[:i])
        if is_dfvs(g_i, current):
            continue
        if len(current) < k:
            current = current | {v}
            continue
        current = compression_step(g_i, current | {v}, k, stats)
        if current is None:
            return None, stats
        assert len(current) <= k and is_dfvs(g_i, current)
    return current, stats

"""Exhaustive reference solvers and small-instance generators for differential tests.

Everything here is exponential on purpose and refuses graphs above
``MAX_VERTICES``.  Subsets are tried by increasing size and, within a size,
in lexicographic order of sorted vertex ids.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import DiGraph, GraphError
from .ordmc import TerminalSystem, check_ordered_separation
from .separator import INFINITE, SeparatorResult

MAX_VERTICES = 12


class InstanceTooLargeError(GraphError):
    pass


def _guard(g: DiGraph, cap: int) -> None:
    if len(g) > cap:
        raise InstanceTooLargeError(f"{len(g)} vertices exceeds oracle cap {cap}")


def _subsets(pool: list[int], max_size: int) -> Iterator[tuple[int, ...]]:
    for size in range(min(max_size, len(pool)) + 1):
        yield from itertools.combinations(pool, size)


def brute_min_dfvs(g: DiGraph, max_size: int, cap: int = MAX_VERTICES) -> frozenset[int] | None:
    _guard(g, cap)
    for s in _subsets(sorted(g), max_size):
        if g.remove_vertices(s).is_acyclic():
            return frozenset(s)
    return None


def brute_ordered_multicut(g: DiGraph, t: TerminalSystem, k: int,
                           cap: int = MAX_VERTICES) -> frozenset[int] | None:
    _guard(g, cap)
    pool = sorted(set(g) - t.vertices)
    for r in _subsets(pool, k):
        if check_ordered_separation(g, t, r):
            return frozenset(r)
    return None


def brute_min_separator(g: DiGraph, a, b, cap: int = MAX_VERTICES) -> SeparatorResult:
    _guard(g, cap)
    a, b = set(a), set(b)
    if any(g.has_edge(x, y) for x in a for y in b):
        return SeparatorResult(INFINITE)
    pool = sorted(set(g) - a - b)
    for r in _subsets(pool, len(pool)):
        if g.remove_vertices(r).reachable_from(a).isdisjoint(b):
            return SeparatorResult(len(r), frozenset(r))
    raise AssertionError("removing every non-terminal must separate")


def edge_universe(n: int, self_loops: bool = True) -> list[tuple[int, int]]:
    """All ordered pairs on ``0..n-1`` (with ``(v, v)`` when ``self_loops``)."""
    return [(u, v) for u in range(n) for v in range(n) if self_loops or u != v]


def enumerate_small_digraphs(n: int, seed: int = 0, count: int | None = None,
                             p: float = 0.5, self_loops: bool = True) -> Iterator[DiGraph]:
    """Every digraph on ``n <= 4`` vertices, or ``count`` random ones otherwise.

    The universe is all ``n*n`` ordered pairs (``n*(n-1)`` without self-loops),
    so ``n = 2`` yields 16 graphs.  Random graphs include each pair with
    probability ``p``.
    """
    universe = edge_universe(n, self_loops)
    if n <= 4:
        for mask in range(1 << len(universe)):
            yield DiGraph.from_edges(n, (e for i, e in enumerate(universe) if mask >> i & 1))
        return
    if count is None:
        raise ValueError("count is required for n > 4")
    rng = random.Random(seed)
    for _ in range(count):
        yield DiGraph.from_edges(n, (e for e in universe if rng.random() < p))


def random_dag(n: int, p: float, rng: random.Random) -> DiGraph:
    """Random DAG: random topological order, each forward pair kept with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    return DiGraph.from_edges(
        n, ((order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def random_ordmc_instances(n: int, l: int, seed: int, count: int,
                           p: float = 0.4) -> Iterator[tuple[DiGraph, TerminalSystem]]:
    """Random DAGs with ``l`` terminal pairs drawn uniformly from the vertices."""
    if 2 * l > n:
        raise ValueError(f"{l} terminal pairs need at least {2 * l} vertices")
    rng = random.Random(seed)
    for _ in range(count):
        g = random_dag(n, p, rng)
        picked = rng.sample(range(n), 2 * l)
        yield g, TerminalSystem(picked[:l], picked[l:])

"""Ordered multicut in a DAG.

Given terminal sequences ``xs = (x_1..x_l)`` and ``ys = (y_1..y_l)``, find at
most ``k`` non-terminal vertices whose removal kills every path from ``x_i``
to ``y_j`` with ``i >= j``.  Results are ``frozenset`` witnesses, or ``None``
for a NO answer.
"""
from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Iterable, Sequence

from .graph import DiGraph, GraphError
from .separator import min_vertex_separator


class IllegalInstanceError(GraphError):
    pass


@dataclass(frozen=True)
class TerminalSystem:
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    def __init__(self, xs: Sequence[int], ys: Sequence[int]):
        object.__setattr__(self, "xs", tuple(xs))
        object.__setattr__(self, "ys", tuple(ys))
        if not self.xs or len(self.xs) != len(self.ys):
            raise IllegalInstanceError("xs and ys must be nonempty and of equal length")
        if len(set(self.xs)) != len(self.xs) or len(set(self.ys)) != len(self.ys):
            raise IllegalInstanceError("duplicate terminal")
        if not set(self.xs).isdisjoint(self.ys):
            raise IllegalInstanceError("xs and ys overlap")

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.xs) | frozenset(self.ys)

    def check_in(self, g: DiGraph) -> None:
        for v in self.xs + self.ys:
            if v not in g:
                raise IllegalInstanceError(f"terminal {v} is not a vertex of the graph")

    def drop_last(self) -> TerminalSystem:
        return TerminalSystem(self.xs[:-1], self.ys[:-1])


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    flow_calls: int = 0
    shrink_steps: int = 0
    branch_steps: int = 0
    orderings: int = 0
    find_cut_calls: int = 0
    max_leaves: int = 0
    """Largest leaf count of a single top-level ``find_cut`` call."""
    leaf_bound_violations: int = 0
    """Top-level calls whose leaf count exceeded ``2**(2k+1)``."""

    def merge(self, other: SearchStats) -> None:
        for f in fields(self):
            if f.name == "max_leaves":
                self.max_leaves = max(self.max_leaves, other.max_leaves)
            else:
                setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def leaf_bound(k: int) -> int:
    return 2 ** (2 * k + 1)


def check_ordered_separation(g: DiGraph, t: TerminalSystem, r: Iterable[int]) -> bool:
    """True iff ``g - r`` has no path ``x_i -> y_j`` for any ``i >= j``."""
    r = set(r)
    t.check_in(g)
    if not r.isdisjoint(t.vertices):
        raise IllegalInstanceError(f"separator contains terminals {sorted(r & t.vertices)}")
    h = g.remove_vertices(r)
    for i, x in enumerate(t.xs):
        reach = h.reachable_from([x])
        if not reach.isdisjoint(t.ys[: i + 1]):
            return False
    return True


def normalize_terminals(g: DiGraph, t: TerminalSystem) -> DiGraph:
    """Equivalent instance in which every x is a source and every y a sink.

    Edges entering an x or leaving a y are dropped.  To keep orderly
    separation unchanged, an edge ``(u, v)`` is added whenever the original
    graph has a path ``u -> v`` of length at least two whose interior consists
    of terminals only (``u`` not a y, ``v`` not an x).  A single intermediate
    terminal is the common case; chains such as ``x_1 -> y_2 -> v`` need the
    full closure.
    """
    t.check_in(g)
    if not g.is_acyclic():
        raise IllegalInstanceError("graph is not acyclic")
    xs, ys = set(t.xs), set(t.ys)
    terms = xs | ys
    h = g.remove_edges([(w, x) for x in xs for w in g.predecessors(x)]
                       + [(y, w) for y in ys for w in g.successors(y)])

    for u in g:
        if u in ys:
            continue
        # walk forward from u through terminals only
        stack = [w for w in g.successors(u) if w in terms]
        seen = set(stack)
        while stack:
            w = stack.pop()
            for v in g.successors(w):
                if v in terms:
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
                if v not in xs:
                    h.add_edge(u, v)
    return h


def check_legal(g: DiGraph, t: TerminalSystem, k: int) -> None:
    t.check_in(g)
    if k < 0:
        raise IllegalInstanceError(f"negative parameter k={k}")
    if not g.is_acyclic():
        raise IllegalInstanceError("graph is not acyclic")
    for x in t.xs:
        if not g.is_minimal(x):
            raise IllegalInstanceError(f"terminal x={x} has entering edges")
    for y in t.ys:
        if not g.is_maximal(y):
            raise IllegalInstanceError(f"terminal y={y} has leaving edges")


def find_cut(g: DiGraph, t: TerminalSystem, k: int,
             stats: SearchStats | None = None) -> frozenset[int] | None:
    """Branching search for an ordered multicut of size at most ``k``.

    ``(g, t, k)`` must be legal: ``g`` acyclic, xs minimal, ys maximal.
    Counters for this call are added to ``stats``.
    """
    check_legal(g, t, k)
    local = SearchStats()
    result = _find_cut(g, t.xs, t.ys, k, local)
    local.find_cut_calls = 1
    local.max_leaves = local.leaves
    if local.leaves > leaf_bound(k):
        local.leaf_bound_violations = 1
    if stats is not None:
        stats.merge(local)
    return result


def _find_cut(g: DiGraph, xs: tuple[int, ...], ys: tuple[int, ...], k: int,
              stats: SearchStats) -> frozenset[int] | None:
    stats.nodes += 1
    x = xs[-1]
    if len(xs) == 1:
        stats.leaves += 1
        stats.flow_calls += 1
        sep = min_vertex_separator(g, [x], [ys[0]], cap=k + 1)
        return sep.witness if sep.size <= k else None

    ys_set = set(ys)
    stats.flow_calls += 1
    sep = min_vertex_separator(g, [x], ys_set, cap=k + 1).size
    if sep > k:
        stats.leaves += 1
        return None

    succ = g.successors(x)
    if not succ:
        return _find_cut(g.remove_vertices([x, ys[-1]]), xs[:-1], ys[:-1], k, stats)

    u = min(succ)
    bypassed = g.bypass_vertex(u)
    stats.flow_calls += 1
    if min_vertex_separator(bypassed, [x], ys_set, cap=k + 1).size == sep:
        stats.shrink_steps += 1
        return _find_cut(bypassed, xs, ys, k, stats)

    # sep <= k and a path exists here, so sep >= 1 and k >= 1
    stats.branch_steps += 1
    found = _find_cut(g.remove_vertices([u]), xs, ys, k - 1, stats)
    if found is not None:
        return found | {u}
    return _find_cut(bypassed, xs, ys, k, stats)


def solve_ordmc(g: DiGraph, t: TerminalSystem, k: int) -> tuple[frozenset[int] | None, SearchStats]:
    """Normalize terminals, then search.  A solution is valid in ``g`` itself."""
    if k < 0:
        raise IllegalInstanceError(f"negative parameter k={k}")
    h = normalize_terminals(g, t)
    stats = SearchStats()
    result = find_cut(h, t, k, stats)
    if result is not None:
        assert len(result) <= k and check_ordered_separation(g, t, result)
    return result, stats

"""Minimum vertex separators via unit-capacity flow on a vertex-split network.

Every non-terminal vertex ``v`` becomes an arc ``in(v) -> out(v)`` of capacity
one; original edges have unbounded capacity.  Terminals stay unsplit and hang
off a super source (``a``) or super sink (``b``), so they are never removable.
Sizes are plain ``int`` or ``INFINITE`` (``math.inf``) when an edge runs
directly from ``a`` to ``b``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import DiGraph, GraphError

INFINITE = math.inf

_SOURCE = -1
_SINK = -2
_UNBOUNDED = 1 << 30


class TerminalError(GraphError):
    pass


@dataclass(frozen=True)
class SeparatorResult:
    size: int | float
    witness: frozenset[int] = frozenset()
    disjoint_paths: list[list[int]] = field(default_factory=list)
    capped: bool = False
    """True when augmentation stopped at the cap; ``size`` is then a lower bound
    and ``witness`` is empty."""

    @property
    def is_infinite(self) -> bool:
        return self.size == INFINITE


def _validate(g: DiGraph, a: set[int], b: set[int]) -> None:
    if not a or not b:
        raise TerminalError("terminal sets must be nonempty")
    if a & b:
        raise TerminalError(f"terminal sets overlap on {sorted(a & b)}")
    for v in a | b:
        if v not in g:
            raise TerminalError(f"unknown terminal vertex {v}")


def _has_direct_edge(g: DiGraph, a: set[int], b: set[int]) -> bool:
    return any(not b.isdisjoint(g.successors(x)) for x in a)


class _SplitNetwork:
    # Node encoding: 2v is in(v), 2v+1 is out(v); _SOURCE/_SINK are super terminals.

    def __init__(self, g: DiGraph, a: set[int], b: set[int]):
        self.cap: dict[int, dict[int, int]] = {_SOURCE: {}, _SINK: {}}
        cap = self.cap

        def arc(p: int, q: int, c: int) -> None:
            cap.setdefault(p, {})
            cap.setdefault(q, {})
            cap[p][q] = cap[p].get(q, 0) + c
            cap[q].setdefault(p, 0)

        # terminals are not split: in(t) == out(t) == 2t
        for v in g:
            if v in a:
                arc(_SOURCE, 2 * v, _UNBOUNDED)
            elif v in b:
                arc(2 * v, _SINK, _UNBOUNDED)
            else:
                arc(2 * v, 2 * v + 1, 1)
        for u in g:
            if u in b:
                continue
            p = 2 * u if u in a else 2 * u + 1
            for v in g.successors(u):
                if v in a or v == u:
                    continue
                arc(p, 2 * v, _UNBOUNDED)
        self.original = {p: dict(qs) for p, qs in cap.items()}

    def augment(self) -> bool:
        cap = self.cap
        parent = {_SOURCE: _SOURCE}
        queue = deque([_SOURCE])
        while queue:
            p = queue.popleft()
            for q, c in cap[p].items():
                if c > 0 and q not in parent:
                    parent[q] = p
                    if q == _SINK:
                        while q != _SOURCE:
                            p = parent[q]
                            cap[p][q] -= 1
                            cap[q][p] += 1
                            q = p
                        return True
                    queue.append(q)
        return False

    def residual_reachable(self) -> set[int]:
        seen = {_SOURCE}
        queue = deque(seen)
        while queue:
            p = queue.popleft()
            for q, c in self.cap[p].items():
                if c > 0 and q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    def decompose(self) -> list[list[int]]:
        """Split the flow into vertex paths running from some ``a`` to some ``b``."""
        flow = {}
        for p, qs in self.original.items():
            for q, c in qs.items():
                f = c - self.cap[p][q]
                if f > 0:
                    flow[p, q] = f
        out: dict[int, list[int]] = {}
        for p, q in flow:
            out.setdefault(p, []).append(q)

        paths = []
        while True:
            walk = [_SOURCE]
            where = {_SOURCE: 0}
            while walk[-1] != _SINK:
                p = walk[-1]
                q = next((q for q in out.get(p, ()) if flow.get((p, q), 0) > 0), None)
                if q is None:
                    if p == _SOURCE:
                        return paths
                    raise AssertionError("flow conservation violated")
                if q in where:
                    # cancel the cycle and keep walking from q
                    cyc = walk[where[q]:] + [q]
                    for x, y in zip(cyc, cyc[1:]):
                        flow[x, y] -= 1
                    for x in walk[where[q] + 1:]:
                        del where[x]
                    del walk[where[q] + 1:]
                    continue
                where[q] = len(walk)
                walk.append(q)
            for x, y in zip(walk, walk[1:]):
                flow[x, y] -= 1
            paths.append([p // 2 for p in walk[1:-1] if p >= 0 and p % 2 == 0])


def min_vertex_separator(g: DiGraph, a: Iterable[int], b: Iterable[int],
                         cap: int | None = None,
                         with_paths: bool = False) -> SeparatorResult:
    """Smallest set of non-terminal vertices cutting every ``a -> b`` path.

    With ``cap`` set, augmentation stops once the flow reaches ``cap``; the
    result then reports ``size == cap`` and ``capped=True``.  Callers that only
    compare against a budget ``k`` pass ``cap=k+1``.
    """
    a, b = set(a), set(b)
    _validate(g, a, b)
    if _has_direct_edge(g, a, b):
        return SeparatorResult(INFINITE)
    net = _SplitNetwork(g, a, b)
    flow = 0
    while (cap is None or flow < cap) and net.augment():
        flow += 1
    paths = net.decompose() if with_paths else []
    if cap is not None and flow >= cap:
        return SeparatorResult(flow, frozenset(), paths, capped=True)
    reach = net.residual_reachable()
    witness = frozenset(v for v in g
                        if v not in a and v not in b and 2 * v in reach and 2 * v + 1 not in reach)
    return SeparatorResult(flow, witness, paths)


def separator_size(g: DiGraph, a: Iterable[int], b: Iterable[int],
                   cap: int | None = None) -> int | float:
    return min_vertex_separator(g, a, b, cap=cap).size


def separator_size_after_bypass(g: DiGraph, u: int, a: Iterable[int], b: Iterable[int],
                                cap: int | None = None) -> int | float:
    """Separator size in ``g`` with ``u`` bypassed; ``u`` must be a non-terminal."""
    a, b = set(a), set(b)
    if u in a or u in b:
        raise TerminalError(f"cannot bypass terminal {u}")
    return separator_size(g.bypass_vertex(u), a, b, cap=cap)

"""Directed graphs with stable vertex identities.

Vertex ids are never reused: every graph carries an id counter, and graphs
derived from it (copies, subgraphs, bypasses) inherit that counter.  A vertex
set computed on a derived graph can therefore be read back in the ancestor.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class UnknownVertexError(GraphError, KeyError):
    def __init__(self, v):
        super().__init__(f"unknown vertex {v!r}")
        self.vertex = v

    def __str__(self) -> str:
        return self.args[0]


class DiGraph:
    """Mutable directed graph with set semantics for edges.

    Self-loops are allowed.  Operations that derive a new graph
    (``remove_vertices``, ``bypass_vertex`` ...) never touch ``self``.
    """

    __slots__ = ("_succ", "_pred", "_next_id")

    def __init__(self) -> None:
        self._succ: dict[int, set[int]] = {}
        self._pred: dict[int, set[int]] = {}
        self._next_id = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge] = ()) -> DiGraph:
        """Graph on vertices ``0..n-1`` with the given edges."""
        g = cls()
        for _ in range(n):
            g.add_vertex()
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- construction -------------------------------------------------

    def add_vertex(self) -> int:
        v = self._next_id
        self._next_id += 1
        self._succ[v] = set()
        self._pred[v] = set()
        return v

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        self._succ[u].add(v)
        self._pred[v].add(u)

    def copy(self) -> DiGraph:
        h = DiGraph.__new__(DiGraph)
        h._succ = {v: set(s) for v, s in self._succ.items()}
        h._pred = {v: set(s) for v, s in self._pred.items()}
        h._next_id = self._next_id
        return h

    # -- queries --------------------------------------------------------

    def _check(self, v: int) -> None:
        if v not in self._succ:
            raise UnknownVertexError(v)

    def _check_all(self, vs: Iterable[int]) -> None:
        for v in vs:
            self._check(v)

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __len__(self) -> int:
        return len(self._succ)

    def __iter__(self) -> Iterator[int]:
        return iter(self._succ)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self._succ == other._succ

    def __repr__(self) -> str:
        return f"DiGraph(vertices={sorted(self._succ)}, edges={sorted(self.edges())})"

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._succ)

    def edges(self) -> set[Edge]:
        return {(u, v) for u, s in self._succ.items() for v in s}

    def num_edges(self) -> int:
        return sum(len(s) for s in self._succ.values())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._succ.get(u, ())

    def successors(self, v: int) -> set[int]:
        """Leaving neighbours of ``v``.  The returned set must not be mutated."""
        self._check(v)
        return self._succ[v]

    def predecessors(self, v: int) -> set[int]:
        """Entering neighbours of ``v``.  The returned set must not be mutated."""
        self._check(v)
        return self._pred[v]

    def is_minimal(self, v: int) -> bool:
        return not self.predecessors(v)

    def is_maximal(self, v: int) -> bool:
        return not self.successors(v)

    # -- derived graphs -------------------------------------------------

    def remove_vertices(self, r: Iterable[int]) -> DiGraph:
        r = set(r)
        self._check_all(r)
        h = self.copy()
        h._drop(r)
        return h

    def _drop(self, r: set[int]) -> None:
        for v in r:
            for w in self._succ.pop(v):
                if w not in r:
                    self._pred[w].discard(v)
            for w in self._pred.pop(v):
                if w not in r:
                    self._succ[w].discard(v)

    def remove_edges(self, es: Iterable[Edge]) -> DiGraph:
        h = self.copy()
        for u, v in es:
            if h.has_edge(u, v):
                h._succ[u].discard(v)
                h._pred[v].discard(u)
        return h

    def edge_subgraph(self, es: Iterable[Edge]) -> DiGraph:
        """The graph formed by ``es`` and the vertices incident to them."""
        h = DiGraph()
        h._next_id = self._next_id
        for u, v in es:
            if not self.has_edge(u, v):
                raise GraphError(f"edge {(u, v)!r} is not in the graph")
            for w in (u, v):
                if w not in h._succ:
                    h._succ[w] = set()
                    h._pred[w] = set()
            h._succ[u].add(v)
            h._pred[v].add(u)
        return h

    def induced_subgraph(self, vs: Iterable[int]) -> DiGraph:
        vs = set(vs)
        self._check_all(vs)
        h = DiGraph()
        h._next_id = self._next_id
        h._succ = {v: self._succ[v] & vs for v in vs}
        h._pred = {v: self._pred[v] & vs for v in vs}
        return h

    def reverse(self) -> DiGraph:
        h = DiGraph()
        h._next_id = self._next_id
        h._succ = {v: set(s) for v, s in self._pred.items()}
        h._pred = {v: set(s) for v, s in self._succ.items()}
        return h

    def bypass_vertex(self, u: int) -> DiGraph:
        """Delete ``u`` and join each entering neighbour to each leaving neighbour."""
        h = self.copy()
        h.bypass_in_place(u)
        return h

    def bypass_in_place(self, u: int) -> None:
        self._check(u)
        if u in self._succ[u]:
            raise GraphError(f"cannot bypass vertex {u} carrying a self-loop")
        ins = self._pred[u]
        outs = self._succ[u]
        for a in ins:
            sa = self._succ[a]
            sa.discard(u)
            for b in outs:
                if a != b:
                    sa.add(b)
                    self._pred[b].add(a)
        for b in outs:
            self._pred[b].discard(u)
        del self._succ[u]
        del self._pred[u]

    # -- reachability ---------------------------------------------------

    def reachable_from(self, seeds: Iterable[int]) -> set[int]:
        return self._search(seeds, self._succ)

    def co_reachable_to(self, targets: Iterable[int]) -> set[int]:
        return self._search(targets, self._pred)

    def _search(self, seeds: Iterable[int], adj: dict[int, set[int]]) -> set[int]:
        seen = set(seeds)
        self._check_all(seen)
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def topological_order(self) -> list[int] | None:
        """Kahn's algorithm; ``None`` when the graph has a cycle (self-loops count)."""
        indeg = {v: len(p) for v, p in self._pred.items()}
        queue = deque(sorted(v for v, d in indeg.items() if d == 0))
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in self._succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return order if len(order) == len(self._succ) else None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

"""Line-oriented instance files and the instance generator.

Grammar (one item per line, ``#`` starts a comment line, blank lines ignored)::

    p <kind> <n> <m> <k>      kind is dfvs or ordmc; exactly once, first
    x <v> <v> ...             ordmc only: x_1 .. x_l in order
    y <v> <v> ...             ordmc only: y_1 .. y_l in order
    <u> <v>                   m edge lines, labels in [0, n)

Example::

    p dfvs 3 3 1
    0 1
    1 2
    2 0
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import DiGraph
from .ordmc import IllegalInstanceError, TerminalSystem
from .oracle import random_dag

KINDS = ("dfvs", "ordmc")


class InstanceFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class Instance:
    kind: str
    n: int
    k: int
    edges: list[tuple[int, int]] = field(default_factory=list)
    xs: list[int] = field(default_factory=list)
    ys: list[int] = field(default_factory=list)

    def graph(self) -> DiGraph:
        return DiGraph.from_edges(self.n, self.edges)

    def terminals(self) -> TerminalSystem:
        return TerminalSystem(self.xs, self.ys)

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InstanceFormatError(f"unknown problem kind {self.kind!r}")
        if self.n < 0 or self.k < 0:
            raise InstanceFormatError("n and k must be non-negative")
        seen = set()
        for u, v in self.edges:
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise InstanceFormatError(f"edge label {w} outside [0, {self.n})")
            if (u, v) in seen:
                raise InstanceFormatError(f"duplicate edge {u} {v}")
            seen.add((u, v))
        if self.kind == "dfvs":
            if self.xs or self.ys:
                raise InstanceFormatError("dfvs instances take no terminals")
            return
        for w in self.xs + self.ys:
            if not 0 <= w < self.n:
                raise InstanceFormatError(f"terminal label {w} outside [0, {self.n})")
        try:
            self.terminals()
        except IllegalInstanceError as exc:
            raise InstanceFormatError(str(exc)) from None
        if not self.graph().is_acyclic():
            raise InstanceFormatError("ordmc graph has a cycle")


def parse_instance(text: str) -> Instance:
    inst = None
    expected_edges = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if inst is not None:
                raise InstanceFormatError("second header line", lineno)
            if len(parts) != 5:
                raise InstanceFormatError("header must read 'p <kind> <n> <m> <k>'", lineno)
            kind = parts[1]
            if kind not in KINDS:
                raise InstanceFormatError(f"unknown problem kind {kind!r}", lineno)
            n, expected_edges, k = (_int(s, lineno) for s in parts[2:])
            inst = Instance(kind, n, k)
            continue
        if inst is None:
            raise InstanceFormatError("missing header line", lineno)
        if parts[0] in ("x", "y"):
            if inst.kind != "ordmc":
                raise InstanceFormatError("terminal lines only allowed in ordmc files", lineno)
            seq = inst.xs if parts[0] == "x" else inst.ys
            if seq:
                raise InstanceFormatError(f"repeated '{parts[0]}' line", lineno)
            if len(parts) < 2:
                raise InstanceFormatError("empty terminal list", lineno)
            seq.extend(_int(s, lineno) for s in parts[1:])
            continue
        if len(parts) != 2:
            raise InstanceFormatError("edge line must hold two labels", lineno)
        inst.edges.append((_int(parts[0], lineno), _int(parts[1], lineno)))
    if inst is None:
        raise InstanceFormatError("missing header line")
    if len(inst.edges) != expected_edges:
        raise InstanceFormatError(f"header announces {expected_edges} edges, found {len(inst.edges)}")
    if inst.kind == "ordmc" and not (inst.xs and inst.ys):
        raise InstanceFormatError("ordmc file needs both 'x' and 'y' lines")
    inst.validate()
    return inst


def _int(s: str, lineno: int) -> int:
    try:
        value = int(s)
    except ValueError:
        raise InstanceFormatError(f"expected an integer, got {s!r}", lineno) from None
    if value < 0:
        raise InstanceFormatError(f"negative value {value}", lineno)
    return value


def render_instance(inst: Instance) -> str:
    lines = [f"p {inst.kind} {inst.n} {len(inst.edges)} {inst.k}"]
    if inst.kind == "ordmc":
        lines.append("x " + " ".join(map(str, inst.xs)))
        lines.append("y " + " ".join(map(str, inst.ys)))
    lines.extend(f"{u} {v}" for u, v in inst.edges)
    return "\n".join(lines) + "\n"


# -- generation -------------------------------------------------------------


def generate_instance(kind: str, n: int, density: float, k: int, seed: int,
                      planted: bool = False, pairs: int = 2) -> Instance:
    """Deterministic random instance; ``planted`` guarantees a solution of size ``k``."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density {density} outside [0, 1]")
    rng = random.Random(seed)
    if kind == "dfvs":
        if planted and k > n:
            raise ValueError(f"cannot plant {k} vertices in a graph of {n}")
        edges = _planted_dfvs(n, density, k, rng) if planted else _random_digraph(n, density, rng)
        return Instance("dfvs", n, k, sorted(edges))
    if pairs < 1:
        raise ValueError("ordmc needs at least one terminal pair")
    if 2 * pairs + (k if planted else 0) > n:
        raise ValueError(f"n={n} too small for {pairs} terminal pairs")
    if planted:
        edges, xs, ys = _planted_ordmc(n, density, k, pairs, rng)
    else:
        g = random_dag(n, density, rng)
        picked = rng.sample(range(n), 2 * pairs)
        edges, xs, ys = g.edges(), picked[:pairs], picked[pairs:]
    return Instance("ordmc", n, k, sorted(edges), list(xs), list(ys))


def _random_digraph(n: int, p: float, rng: random.Random) -> set[tuple[int, int]]:
    return {(u, v) for u in range(n) for v in range(n) if rng.random() < p}


def _planted_dfvs(n: int, p: float, k: int, rng: random.Random) -> set[tuple[int, int]]:
    # the complement of the planted set only gets edges along a random order
    labels = list(range(n))
    rng.shuffle(labels)
    planted, rest = set(labels[:k]), labels[k:]
    edges = set()
    for u in range(n):
        for v in range(n):
            if u in planted or v in planted:
                if rng.random() < p:
                    edges.add((u, v))
    for i, u in enumerate(rest):
        for v in rest[i + 1:]:
            if rng.random() < p:
                edges.add((u, v))
    return edges


def _planted_ordmc(n: int, p: float, k: int, l: int, rng: random.Random):
    """Random DAG in which a hidden set of ``k`` vertices orderly separates.

    Non-hidden inner vertices get a block number in ``1..l``; edges among
    them never decrease the block, ``x_i`` only feeds blocks ``>= i`` and
    ``y_j`` only hears from blocks ``< j``.  So without the hidden vertices
    ``x_i`` reaches ``y_j`` only if ``i < j``.  Hidden vertices are wired
    freely along a global topological order.
    """
    labels = list(range(n))
    rng.shuffle(labels)
    xs, ys = labels[:l], labels[l:2 * l]
    inner = labels[2 * l:]
    hidden = set(inner[:k])
    block = {v: rng.randint(1, l) for v in inner[k:]}
    rng.shuffle(inner)
    pos = {v: i for i, v in enumerate(inner)}

    def allowed(u: int, v: int) -> bool:
        if u in hidden or v in hidden:
            return True
        return block[u] <= block[v]

    edges = set()
    for u in inner:
        for v in inner:
            if pos[u] < pos[v] and allowed(u, v) and rng.random() < p:
                edges.add((u, v))
    for i, x in enumerate(xs, 1):
        for v in inner:
            if (v in hidden or block[v] >= i) and rng.random() < p:
                edges.add((x, v))
    for j, y in enumerate(ys, 1):
        for v in inner:
            if (v in hidden or block[v] < j) and rng.random() < p:
                edges.add((v, y))
    return edges, xs, ys

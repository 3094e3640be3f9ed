import pytest
from hypothesis import strategies as st

from dfvsfpt.graph import DiGraph

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def g_of(n, *edges):
    return DiGraph.from_edges(n, edges)


@pytest.fixture
def triangle():
    return g_of(3, (0, 1), (1, 2), (2, 0))


@st.composite
def digraphs(draw, max_n=7, self_loops=True):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if self_loops or u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=3 * n)) if pairs else []
    return DiGraph.from_edges(n, chosen)


@st.composite
def dags(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    order = draw(st.permutations(range(n)))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=3 * n)) if pairs else []
    return DiGraph.from_edges(n, chosen)

import random
from contextlib import contextmanager

import networkx as nx
import pytest
from hypothesis import strategies as st

from clique_extremal.graph import Graph, from_edges, from_edge_mask

ACCEPTANCE_LINES: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    """Record a PASS/FAIL line for an acceptance criterion, re-raising any failure."""
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"criterion {number:2d} FAIL  {title}")
        raise
    ACCEPTANCE_LINES.append(f"criterion {number:2d} PASS  {title}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


@st.composite
def graphs(draw, max_n: int = 12, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return from_edge_mask(n, mask)


@pytest.fixture
def rng():
    return random.Random(20061)

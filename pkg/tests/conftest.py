import random
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from granular.graph import Graph, make_family, random_connected_graph
from granular.metric_table import InformationTable

CORPUS_SEED = 1234
CORPUS_SIZE = 100


@lru_cache(maxsize=None)
def random_corpus() -> tuple[Graph, ...]:
    """The 100 random connected graphs (4 <= n <= 10) shared by the cross-validation suites."""
    rng = random.Random(CORPUS_SEED)
    return tuple(random_connected_graph(rng.randint(4, 10), rng) for _ in range(CORPUS_SIZE))


@lru_cache(maxsize=None)
def family_corpus() -> tuple[Graph, ...]:
    from granular.zerodiv import gamma_boolean, gamma_zn

    graphs = [make_family("path", [n]) for n in range(2, 9)]
    graphs += [make_family("cycle", [n]) for n in range(3, 9)]
    graphs += [make_family("complete", [n]) for n in range(2, 7)]
    graphs += [make_family("complete_bipartite", mn) for mn in ([1, 3], [2, 2], [2, 3], [3, 3], [2, 4])]
    graphs += [gamma_zn(n)[0] for n in (8, 9, 12, 15, 16, 18, 20)]
    graphs += [gamma_boolean(k)[0] for k in (3, 4)]
    return tuple(graphs)


def table(g: Graph) -> InformationTable:
    return InformationTable.from_graph(g)


def floyd_warshall(g: Graph) -> list[list[float]]:
    """Independent distance oracle for tests."""
    n = g.n
    inf = float("inf")
    d = [[0 if i == j else (1 if j in g.adjacency[i] else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, 1)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return Graph.from_edges([f"v{i + 1}" for i in range(n)], sorted(edges))


@st.composite
def graphs_with_subset(draw, min_n=1, max_n=9):
    g = draw(connected_graphs(min_n, max_n))
    attrs = draw(st.sets(st.integers(0, g.n - 1)))
    return g, tuple(sorted(attrs))


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture(scope="session")
def families():
    return family_corpus()


def pytest_terminal_summary(terminalreporter):
    reports = [
        r
        for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance.py" in r.nodeid
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {name}")

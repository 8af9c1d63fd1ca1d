import networkx as nx
import pytest

from hamcheck.core.graph import Graph
from hamcheck.invariants.report import InvariantReport


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run exhaustive n=6,7 and random agreement runs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def petersen_graph():
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def bull():
    # triangle 0 1 2 with horns 3 (at 1) and 4 (at 2)
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


@pytest.fixture
def star():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4_minus_edge():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def butterfly():
    # two triangles sharing vertex 0
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@pytest.fixture
def triangle_with_tail():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])


def fake_report(n=8, p=8, c=6, kappa=2, delta=3, sigma_values=None, **flags):
    """Report with chosen atoms and no graph behind it"""
    return InvariantReport(
        graph=None,
        g6="fake",
        n=n,
        m=0,
        min_degree=delta,
        connectivity=kappa,
        independence_number=3,
        sigma=dict(sigma_values or {}),
        p=p,
        c=c,
        **flags,
    )

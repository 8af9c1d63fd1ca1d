import networkx as nx
import pytest

from conftest import complete_graph, cycle_graph, path_graph
from hamcheck.checker.corpus import enumerate_labeled, random_graphs
from hamcheck.core.graph import Graph
from hamcheck.invariants.connectivity import (
    OracleBoundError,
    connectivity,
    local_vertex_connectivity,
    min_vertex_cut_bruteforce,
)


def test_named_graphs(petersen, butterfly):
    assert connectivity(petersen) == 3
    assert connectivity(cycle_graph(7)) == 2
    assert connectivity(path_graph(4)) == 1
    assert connectivity(butterfly) == 1
    assert connectivity(complete_graph(5)) == 4
    assert connectivity(Graph.from_networkx(nx.complete_bipartite_graph(3, 4))) == 3


def test_trivial_and_disconnected():
    assert connectivity(Graph(0, [])) == 0
    assert connectivity(Graph(1, [frozenset()])) == 0
    assert connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0


def test_local_connectivity(petersen):
    assert local_vertex_connectivity(petersen, 0, 2) == 3
    assert local_vertex_connectivity(cycle_graph(6), 0, 3) == 2
    with pytest.raises(ValueError):
        local_vertex_connectivity(petersen, 0, 1)


def test_oracle_bound():
    with pytest.raises(OracleBoundError):
        min_vertex_cut_bruteforce(cycle_graph(11), oracle_bound=10)


def test_agrees_with_oracles_up_to_five():
    for n in range(6):
        for g in enumerate_labeled(n):
            assert connectivity(g) == min_vertex_cut_bruteforce(g)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_agrees_with_oracles_connected(n):
    for g in enumerate_labeled(n, lambda g: g.is_connected()):
        assert connectivity(g) == min_vertex_cut_bruteforce(g)


def check_monotone_under_edge_addition(n):
    for g in enumerate_labeled(n):
        kappa = connectivity(g)
        for u, v in g.non_edges():
            assert connectivity(g.with_edge(u, v)) >= kappa


def test_adding_an_edge_never_lowers_connectivity():
    for n in range(1, 6):
        check_monotone_under_edge_addition(n)


@pytest.mark.slow
def test_adding_an_edge_never_lowers_connectivity_on_six():
    check_monotone_under_edge_addition(6)


@pytest.mark.slow
def test_agrees_with_networkx_on_random_graphs():
    for g in random_graphs(200, range(8, 11), [0.2, 0.5, 0.8], seed=7):
        assert connectivity(g) == nx.node_connectivity(g.to_networkx())

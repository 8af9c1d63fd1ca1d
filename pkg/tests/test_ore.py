import pytest

from conftest import complete_graph, cycle_graph, path_graph
from hamcheck.checker.corpus import enumerate_labeled
from hamcheck.constructive.certificate import (
    CertificateError,
    CycleOfOrderP,
    HamiltonCycle,
    Refutation,
)
from hamcheck.constructive.ore import (
    DisconnectedGraphError,
    GraphTooSmallError,
    PathClosureError,
    certify_theorem1,
    ore_close,
)
from hamcheck.core.constants import CertificateKind
from hamcheck.core.graph import Graph
from hamcheck.core.oriented import OrientedPath
from hamcheck.invariants.independence import sigma_k
from hamcheck.invariants.longest import longest_path


def test_close_through_end_edge():
    g = cycle_graph(5)
    result = ore_close(g, OrientedPath(g, [0, 1, 2, 3, 4]))
    assert isinstance(result, CycleOfOrderP)
    assert result.cycle.verts == (0, 1, 2, 3, 4)


def test_close_through_crossing_neighbour():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)])
    result = ore_close(g, OrientedPath(g, [0, 1, 2, 3]))
    assert result.kind == CertificateKind.CYCLE_OF_ORDER_P
    assert result.cycle.verts == (2, 3, 1, 0)


def test_unclosable_path_is_refuted(star):
    result = ore_close(star, OrientedPath(star, [1, 0, 2]))
    assert result == Refutation(frozenset({1, 2}), 2, 3)


def test_short_path_cannot_close():
    with pytest.raises(PathClosureError):
        ore_close(path_graph(2), OrientedPath(path_graph(2), [0, 1]))


def test_non_longest_path_is_detected():
    # 0-1-2 has end degree sum 4 >= 3 but extends to 4-0-1-2-3
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (3, 4), (0, 4)])
    with pytest.raises(PathClosureError):
        ore_close(g, OrientedPath(g, [0, 1, 2]))


def test_star_refutation(star):
    result = certify_theorem1(star)
    assert isinstance(result, Refutation)
    assert (result.degree_sum, result.bound) == (2, 3)
    assert len(result.vertices) == 2 and result.vertices <= {1, 2, 3}


def test_petersen_refutation(petersen):
    result = certify_theorem1(petersen)
    assert result.kind == CertificateKind.REFUTATION
    assert (result.degree_sum, result.bound) == (6, 10)


@pytest.mark.parametrize("n", [6, 7])
def test_cycles_are_certified_hamiltonian(n):
    result = certify_theorem1(cycle_graph(n))
    assert isinstance(result, HamiltonCycle)
    assert sorted(result.witness()) == list(range(n))


def test_complete_graph_is_certified():
    assert certify_theorem1(complete_graph(5)).kind == CertificateKind.HAMILTON_CYCLE


def test_rejects_small_and_disconnected():
    with pytest.raises(GraphTooSmallError):
        certify_theorem1(path_graph(2))
    with pytest.raises(GraphTooSmallError, match="order >= 3"):
        certify_theorem1(Graph(0, []))
    with pytest.raises(DisconnectedGraphError):
        certify_theorem1(Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]))


def test_refutation_validation(bull):
    with pytest.raises(CertificateError):
        Refutation(frozenset({0, 1}), 5, 9).validate(bull)
    with pytest.raises(CertificateError):
        Refutation(frozenset({3, 4}), 3, 9).validate(bull)
    with pytest.raises(CertificateError):
        Refutation(frozenset({3, 4}), 2, 2).validate(bull)


def check_certificates(n):
    for g in enumerate_labeled(n, lambda g: g.is_connected()):
        result = certify_theorem1(g)
        p, _ = longest_path(g)
        if sigma_k(g, 2) >= p:
            assert isinstance(result, HamiltonCycle)
        if isinstance(result, Refutation):
            assert sigma_k(g, 2) < result.bound == p
        else:
            assert len(result.witness()) == g.n


@pytest.mark.parametrize("n", [3, 4, 5])
def test_certificates_agree_with_sigma2(n):
    check_certificates(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_certificates_agree_with_sigma2_six_and_seven(n):
    check_certificates(n)

import pytest

from conftest import complete_graph, cycle_graph
from hamcheck.checker.corpus import enumerate_labeled
from hamcheck.core.oriented import OrientedCycle
from hamcheck.invariants.connectivity import connectivity
from hamcheck.invariants.dominating import (
    CapExceededError,
    InvalidCycleError,
    all_longest_cycles_dominating,
    is_dominating_cycle,
)
from hamcheck.invariants.longest import longest_cycle, longest_path


def test_petersen_longest_cycles_dominate(petersen):
    # every 9-cycle misses exactly one vertex
    assert all_longest_cycles_dominating(petersen)
    _, cycle = longest_cycle(petersen)
    assert is_dominating_cycle(petersen, cycle)


def test_tail_escapes_the_triangle(triangle_with_tail):
    assert not all_longest_cycles_dominating(triangle_with_tail)
    assert not is_dominating_cycle(triangle_with_tail, OrientedCycle(triangle_with_tail, [0, 1, 2]))


def test_hamiltonian_graphs_dominate_trivially():
    assert all_longest_cycles_dominating(cycle_graph(6))
    assert all_longest_cycles_dominating(complete_graph(5), cap=100)


def test_bull_horns_are_independent(bull):
    assert all_longest_cycles_dominating(bull)


def test_butterfly_wing_is_not_dominated(butterfly):
    assert not all_longest_cycles_dominating(butterfly)


def test_cap_exceeded(petersen):
    # ten vertex sets carry a 9-cycle
    with pytest.raises(CapExceededError):
        all_longest_cycles_dominating(petersen, cap=9)
    assert all_longest_cycles_dominating(petersen, cap=10)


def test_cap_counts_vertex_sets_not_orientations():
    assert all_longest_cycles_dominating(cycle_graph(5), cap=1)
    assert all_longest_cycles_dominating(complete_graph(6), cap=1)


def test_needs_a_cycle(star):
    with pytest.raises(ValueError):
        all_longest_cycles_dominating(star)


def test_rejects_foreign_cycle():
    foreign = OrientedCycle(complete_graph(5), [0, 1, 2, 3])
    with pytest.raises(InvalidCycleError):
        is_dominating_cycle(cycle_graph(5), foreign)


def check_small_diff_forces_domination(n):
    for g in enumerate_labeled(n, lambda g: connectivity(g) >= 2):
        p, _ = longest_path(g)
        c, _ = longest_cycle(g)
        if p - c <= 1:
            assert all_longest_cycles_dominating(g, c=c)


def test_small_diff_forces_domination():
    for n in range(3, 6):
        check_small_diff_forces_domination(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_small_diff_forces_domination_on_six_and_seven(n):
    check_small_diff_forces_domination(n)

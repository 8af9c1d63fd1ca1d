import pytest

from conftest import fake_report
from hamcheck.checker.expr import (
    ALPHA,
    C,
    DOMINATING,
    HAMILTONIAN,
    KAPPA,
    LAMBDA,
    P,
    Atom,
    Comparison,
    all_of,
    any_of,
    as_expr,
    minimum,
    sigma,
)
from hamcheck.invariants.extnat import INFINITY
from hamcheck.invariants.report import MissingAtomError


def test_arithmetic_builds_trees():
    expr = 3 * sigma(2) - KAPPA + 1
    assert str(expr) == "3*sigma_2 - kappa + 1"
    assert expr.evaluate(fake_report(sigma_values={2: 5})) == 14
    assert str(P - (KAPPA + 2)) == "p - (kappa + 2)"
    assert (2 - C).evaluate(fake_report()) == -4


def test_infinite_sigma_propagates():
    rep = fake_report(sigma_values={3: INFINITY})
    assert (sigma(3) - 3).evaluate(rep) == INFINITY
    assert C.ge(sigma(3) - 3).evaluate(rep) is False
    assert minimum(P, sigma(3)).evaluate(rep) == 8


def test_lambda_binding():
    rep = fake_report(sigma_values={3: 10, 4: 12})
    expr = sigma(offset=1) - LAMBDA * LAMBDA
    assert expr.uses_lambda
    assert expr.sigma_orders(3) == {4}
    assert expr.evaluate(rep, 3) == 3
    assert str(sigma(offset=1)) == "sigma_(lambda+1)"
    with pytest.raises(MissingAtomError):
        expr.evaluate(rep)
    assert not (C - 1).uses_lambda


def test_missing_sigma():
    with pytest.raises(MissingAtomError):
        sigma(2).evaluate(fake_report())


def test_comparisons():
    rep = fake_report()
    assert C.ge(6).evaluate(rep)
    assert not C.ge(P).evaluate(rep)
    assert KAPPA.eq(2).evaluate(rep)
    assert ALPHA.evaluate(rep) == 3
    with pytest.raises(ValueError):
        Comparison(C, "<", P)


def test_three_valued_connectives():
    capped = fake_report(dominating_cap_exceeded=True)
    assert DOMINATING.evaluate(capped) is None
    assert any_of(DOMINATING, C.ge(6)).evaluate(capped) is True
    assert any_of(DOMINATING, C.ge(P)).evaluate(capped) is None
    assert all_of(DOMINATING, C.ge(P)).evaluate(capped) is False
    assert all_of(DOMINATING, C.ge(6)).evaluate(capped) is None


def test_dominating_predicate_states():
    assert DOMINATING.evaluate(fake_report(all_longest_cycles_dominating=False)) is False
    assert DOMINATING.evaluate(fake_report(c=2)) is None
    with pytest.raises(MissingAtomError):
        DOMINATING.evaluate(fake_report())


def test_hamiltonian_predicate():
    assert HAMILTONIAN.evaluate(fake_report(n=6, p=6, c=6))
    assert not HAMILTONIAN.evaluate(fake_report())
    assert any_of(HAMILTONIAN, C.ge(P)).predicates() == {HAMILTONIAN.name}


def test_rejects_unknown_atoms_and_operands():
    with pytest.raises(ValueError):
        Atom("zeta")
    with pytest.raises(TypeError):
        as_expr(1.5)

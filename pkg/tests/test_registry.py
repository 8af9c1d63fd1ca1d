import random
from fractions import Fraction

import pytest

from conftest import fake_report
from hamcheck.checker.registry import UnknownSpecError, get_spec, registry, select_specs
from hamcheck.core.constants import Predicate, SpecStatus
from hamcheck.invariants.extnat import ExtNat


IDS = [
    "ThmA", "ThmB", "ThmC", "ThmD", "ThmE", "ThmF", "ThmG", "ThmH", "ThmI", "ThmJ", "ThmK",
    "ThmL", "ThmM", "T1", "T2", "T3", "Cor1", "Cor2", "Cor3", "Conj1", "Conj2", "Conj3", "Conj4",
]

# statements as published, before clearing denominators
FRACTIONAL_HYPOTHESES = {
    "ThmA": lambda a, lam: a["delta"] >= Fraction(a["n"], 2),
    "ThmB": lambda a, lam: Fraction(a[2], 2) >= Fraction(a["n"], 2),
    "ThmC": lambda a, lam: a["delta"] >= Fraction(a["n"] + 2, 3),
    "ThmD": lambda a, lam: Fraction(a[3], 3) >= Fraction(a["n"] + 2, 3),
    "ThmE": lambda a, lam: Fraction(a[3], 3) >= Fraction(a["n"] + 2, 3),
    "ThmI": lambda a, lam: a["delta"] >= Fraction(a["n"] + a["kappa"], 3),
    "ThmJ": lambda a, lam: Fraction(a[3], 3) >= Fraction(a["n"] + a["kappa"], 3),
    "T1": lambda a, lam: Fraction(a[2], 2) >= Fraction(a["p"], 2),
    "T2": lambda a, lam: Fraction(a[3], 3) >= Fraction(a["p"] + 2, 3),
    "T3": lambda a, lam: Fraction(a[3], 3) >= Fraction(a["p"] + a["kappa"], 3),
    "Cor1": lambda a, lam: a["delta"] >= Fraction(a["p"], 2),
    "Cor2": lambda a, lam: a["delta"] >= Fraction(a["p"] + 2, 3),
    "Cor3": lambda a, lam: a["delta"] >= Fraction(a["p"] + a["kappa"], 3),
    "Conj1": lambda a, lam: (
        Fraction(a[lam + 1], lam + 1) >= Fraction(a["p"] + 2, lam + 1) + lam - 2
    ),
    "Conj3": lambda a, lam: (
        Fraction(a[lam + 1], lam + 1) >= Fraction(a["p"] + a["kappa"] + 3, lam + 1) + lam - 3
    ),
}

FRACTIONAL_CONCLUSIONS = {
    "Conj2": lambda a, lam: a["c"] >= min(
        a["p"] - lam + 2, lam * (Fraction(a[lam], lam) - lam + 2)
    ),
    "Conj4": lambda a, lam: (
        a["c"] >= lam * (Fraction(a[lam], lam) - Fraction(a["kappa"], lam) - lam + 3)
        or a["c"] >= a["p"] - lam + 3
    ),
}


def random_atoms(rng):
    n = rng.randint(3, 14)
    p = rng.randint(2, n)
    atoms = {
        "n": n,
        "p": p,
        "c": rng.randint(2, p),
        "kappa": rng.randint(0, n - 1),
        "delta": rng.randint(0, n - 1),
    }
    for k in range(1, 7):
        atoms[k] = rng.randint(0, k * (n - 1))
    return atoms


def as_report(atoms):
    return fake_report(
        n=atoms["n"],
        p=atoms["p"],
        c=atoms["c"],
        kappa=atoms["kappa"],
        delta=atoms["delta"],
        sigma_values={k: ExtNat(atoms[k]) for k in range(1, 7)},
    )


def test_registry_order_and_statuses():
    specs = registry()
    assert [s.id for s in specs] == IDS
    assert sum(s.is_theorem for s in specs) == 19
    assert all(s.status == SpecStatus.CONJECTURE for s in specs[19:])


def test_floors_and_lambda_minimums():
    assert str(get_spec("ThmA").connectivity_floor) == "0"
    assert str(get_spec("T1").connectivity_floor) == "1"
    assert str(get_spec("T3").connectivity_floor) == "2"
    assert str(get_spec("ThmK").connectivity_floor) == "3"
    assert [get_spec(i).lambda_min for i in ("Conj1", "Conj2", "Conj3", "Conj4")] == [1, 2, 2, 3]
    assert not get_spec("T2").is_parameterized


def test_rendering():
    assert str(get_spec("T3")) == "T3: kappa >= 2, sigma_3 >= p + kappa => hamiltonian"
    assert str(get_spec("ThmF")) == "ThmF: kappa >= 2, true => hamiltonian or c >= sigma_2"


def test_lambda_values():
    assert get_spec("T1").lambda_values(5) == [None]
    assert get_spec("Conj1").lambda_values(3) == [2, 3]
    assert get_spec("Conj1").lambda_values(3, start=1) == [1, 2, 3]
    assert get_spec("Conj4").lambda_values(5, start=2) == [3, 4, 5]
    assert get_spec("Conj3").lambda_values(4, 2, 3) == [2, 3]
    assert get_spec("Conj2").lambda_values(1) == []


def test_sigma_orders_and_predicates():
    assert get_spec("T1").sigma_orders() == {2}
    assert get_spec("ThmM").sigma_orders() == {3}
    assert get_spec("Conj1").sigma_orders(2) == {3}
    assert get_spec("Conj2").sigma_orders(4) == {4}
    assert get_spec("ThmC").predicates() == {Predicate.DOMINATING}
    assert get_spec("ThmF").predicates() == {Predicate.HAMILTONIAN}
    assert get_spec("T2").predicates() == set()


def test_select_specs():
    assert len(select_specs("theorems")) == 19
    assert [s.id for s in select_specs("conjectures")] == ["Conj1", "Conj2", "Conj3", "Conj4"]
    assert [s.id for s in select_specs("Conj1, T3")] == ["T3", "Conj1"]
    assert len(select_specs()) == 23
    with pytest.raises(UnknownSpecError):
        select_specs("T9")
    with pytest.raises(UnknownSpecError):
        select_specs(",")


@pytest.mark.parametrize("spec_id", sorted(FRACTIONAL_HYPOTHESES))
def test_cleared_hypotheses_match_fractional_forms(spec_id):
    spec = get_spec(spec_id)
    rng = random.Random(spec_id)
    for _ in range(500):
        atoms = random_atoms(rng)
        lams = range(max(spec.lambda_min, 1), 5) if spec.is_parameterized else [None]
        for lam in lams:
            rep = as_report(atoms)
            cleared = all(h.evaluate(rep, lam) for h in spec.hypothesis)
            assert cleared == FRACTIONAL_HYPOTHESES[spec_id](atoms, lam), (atoms, lam)


@pytest.mark.parametrize("spec_id", sorted(FRACTIONAL_CONCLUSIONS))
def test_cleared_conclusions_match_fractional_forms(spec_id):
    spec = get_spec(spec_id)
    rng = random.Random(spec_id)
    for _ in range(500):
        atoms = random_atoms(rng)
        for lam in range(spec.lambda_min, 6):
            rep = as_report(atoms)
            assert spec.conclusion.evaluate(rep, lam) == FRACTIONAL_CONCLUSIONS[spec_id](atoms, lam)

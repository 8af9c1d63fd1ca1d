# -*- encoding: utf-8 -*-
"""
Machine-readable statements. Every inequality is stored with its fractions
cleared, e.g. (1/3) sigma_3 >= (p + kappa) / 3 becomes sigma_3 >= p + kappa.
"""
import logging
from dataclasses import dataclass, field

from hamcheck.core.constants import SpecStatus
from hamcheck.checker.expr import (
    C,
    DELTA,
    DOMINATING,
    HAMILTONIAN,
    KAPPA,
    LAMBDA,
    N,
    P,
    Lit,
    all_of,
    any_of,
    minimum,
    sigma,
)

logger = logging.getLogger("hamcheck.checker.registry")

# lambda-linked specs default to lambda >= 2, Conj1 admits 1 on request
DEFAULT_LAMBDA_START = 2


class UnknownSpecError(LookupError):
    """Spec id or selector not in the registry"""


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    status: SpecStatus
    connectivity_floor: object
    hypothesis: tuple
    conclusion: object
    lambda_min: int = None
    statement: str = field(default="", compare=False)

    @property
    def is_parameterized(self):
        return self.lambda_min is not None

    @property
    def is_theorem(self):
        return self.status == SpecStatus.THEOREM

    def sigma_orders(self, lam=None):
        """sigma_k values evaluation reads for this lambda"""
        output = set()
        for comparison in self.hypothesis:
            output |= comparison.sigma_orders(lam)
        return output | self.conclusion.sigma_orders(lam)

    def predicates(self):
        return self.conclusion.predicates()

    def lambda_values(self, kappa, start=None, stop=None):
        """lambda bindings to check on a graph of connectivity kappa; [None] when unparameterized"""
        if not self.is_parameterized:
            return [None]
        low = max(DEFAULT_LAMBDA_START if start is None else start, self.lambda_min)
        high = kappa if stop is None else min(stop, kappa)
        return list(range(low, high + 1))

    def __str__(self):
        hypothesis = " and ".join(str(h) for h in self.hypothesis) or "true"
        return f"{self.id}: kappa >= {self.connectivity_floor}, {hypothesis} => {self.conclusion}"


def _theorem(id, floor, hypothesis, conclusion, statement):
    return TheoremSpec(id, SpecStatus.THEOREM, Lit(floor), tuple(hypothesis), conclusion,
                       statement=statement)


def _conjecture(id, lambda_min, hypothesis, conclusion, statement):
    return TheoremSpec(id, SpecStatus.CONJECTURE, LAMBDA, tuple(hypothesis), conclusion,
                       lambda_min=lambda_min, statement=statement)


def _build_registry():
    return (
        _theorem("ThmA", 0, [(2 * DELTA).ge(N)], HAMILTONIAN,
                 "delta >= n/2 implies hamiltonian"),
        _theorem("ThmB", 0, [sigma(2).ge(N)], HAMILTONIAN,
                 "sigma_2/2 >= n/2 implies hamiltonian"),
        _theorem("ThmC", 2, [(3 * DELTA).ge(N + 2)], DOMINATING,
                 "2-connected, delta >= (n+2)/3 implies every longest cycle dominating"),
        _theorem("ThmD", 2, [sigma(3).ge(N + 2)], DOMINATING,
                 "2-connected, sigma_3/3 >= (n+2)/3 implies every longest cycle dominating"),
        _theorem("ThmE", 2, [sigma(3).ge(N + 2)], C.ge(P - 1),
                 "2-connected, sigma_3/3 >= (n+2)/3 implies c >= p-1"),
        _theorem("ThmF", 2, [], any_of(HAMILTONIAN, C.ge(sigma(2))),
                 "2-connected implies hamiltonian or c >= sigma_2"),
        _theorem("ThmG", 2, [], any_of(HAMILTONIAN, C.ge(2 * DELTA)),
                 "2-connected implies hamiltonian or c >= 2 delta"),
        _theorem("ThmH", 3, [], any_of(C.ge(sigma(3) - 3), C.ge(P - 1)),
                 "3-connected implies c >= sigma_3 - 3 or c >= p-1"),
        _theorem("ThmI", 2, [(3 * DELTA).ge(N + KAPPA)], HAMILTONIAN,
                 "2-connected, delta >= (n+kappa)/3 implies hamiltonian"),
        _theorem("ThmJ", 2, [sigma(3).ge(N + KAPPA)], HAMILTONIAN,
                 "2-connected, sigma_3/3 >= (n+kappa)/3 implies hamiltonian"),
        _theorem("ThmK", 3, [], any_of(C.ge(sigma(3) - KAPPA), HAMILTONIAN),
                 "3-connected implies c >= sigma_3 - kappa or hamiltonian"),
        _theorem("ThmL", 3, [], any_of(C.ge(3 * DELTA - KAPPA), HAMILTONIAN),
                 "3-connected implies c >= 3 delta - kappa or hamiltonian"),
        _theorem(
            "ThmM",
            2,
            [],
            any_of(C.ge(P - 1), C.ge(sigma(3) - 3), all_of(KAPPA.eq(2), P.ge(sigma(3) - 1))),
            "2-connected implies c >= p-1 or c >= sigma_3 - 3 or (kappa = 2 and p >= sigma_3 - 1)",
        ),
        _theorem("T1", 1, [sigma(2).ge(P)], HAMILTONIAN,
                 "connected, sigma_2/2 >= p/2 implies c = p = n"),
        _theorem("T2", 2, [sigma(3).ge(P + 2)], C.ge(P - 1),
                 "2-connected, sigma_3/3 >= (p+2)/3 implies c >= p-1"),
        _theorem("T3", 2, [sigma(3).ge(P + KAPPA)], HAMILTONIAN,
                 "2-connected, sigma_3/3 >= (p+kappa)/3 implies c = p = n"),
        _theorem("Cor1", 1, [(2 * DELTA).ge(P)], HAMILTONIAN,
                 "connected, delta >= p/2 implies c = p = n"),
        _theorem("Cor2", 2, [(3 * DELTA).ge(P + 2)], C.ge(P - 1),
                 "2-connected, delta >= (p+2)/3 implies c >= p-1"),
        _theorem("Cor3", 2, [(3 * DELTA).ge(P + KAPPA)], HAMILTONIAN,
                 "2-connected, delta >= (p+kappa)/3 implies c = p = n"),
        _conjecture(
            "Conj1",
            1,
            [sigma(offset=1).ge(P + 2 + (LAMBDA + 1) * (LAMBDA - 2))],
            C.ge(P - LAMBDA + 1),
            "lambda-connected, sigma_(lambda+1)/(lambda+1) >= (p+2)/(lambda+1) + lambda - 2 "
            "implies c >= p - lambda + 1",
        ),
        _conjecture(
            "Conj2",
            2,
            [],
            C.ge(minimum(P - LAMBDA + 2, sigma() - LAMBDA * LAMBDA + 2 * LAMBDA)),
            "lambda-connected implies c >= min{p - lambda + 2, lambda(sigma_lambda/lambda - lambda + 2)}",
        ),
        _conjecture(
            "Conj3",
            2,
            [sigma(offset=1).ge(P + KAPPA + 3 + (LAMBDA + 1) * (LAMBDA - 3))],
            C.ge(P - LAMBDA + 2),
            "lambda-connected, sigma_(lambda+1)/(lambda+1) >= (p+kappa+3)/(lambda+1) + lambda - 3 "
            "implies c >= p - lambda + 2",
        ),
        _conjecture(
            "Conj4",
            3,
            [],
            any_of(
                C.ge(sigma() - KAPPA - LAMBDA * LAMBDA + 3 * LAMBDA),
                C.ge(P - LAMBDA + 3),
            ),
            "lambda-connected implies c >= lambda(sigma_lambda/lambda - kappa/lambda - lambda + 3) "
            "or c >= p - lambda + 3",
        ),
    )


_REGISTRY = _build_registry()


def registry():
    """All statements in a fixed order: Theorems A-M, 1-3, Corollaries 1-3, Conjectures 1-4"""
    return list(_REGISTRY)


def get_spec(spec_id):
    for spec in _REGISTRY:
        if spec.id == spec_id:
            return spec
    raise UnknownSpecError(f"Unknown spec id {spec_id!r}")


def select_specs(selector="all"):
    """'all', 'theorems', 'conjectures' or a comma-separated id list, in registry order"""
    selector = selector.strip()
    if selector == "all":
        return registry()
    if selector == "theorems":
        return [s for s in _REGISTRY if s.status == SpecStatus.THEOREM]
    if selector == "conjectures":
        return [s for s in _REGISTRY if s.status == SpecStatus.CONJECTURE]
    ids = [part.strip() for part in selector.split(",") if part.strip()]
    if not ids:
        raise UnknownSpecError(f"Empty spec selection {selector!r}")
    wanted = {get_spec(spec_id).id for spec_id in ids}
    return [s for s in _REGISTRY if s.id in wanted]

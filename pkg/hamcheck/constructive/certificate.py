# -*- encoding: utf-8 -*-
from dataclasses import dataclass

from hamcheck.core.constants import CertificateKind
from hamcheck.core.oriented import OrientedCycle


class CertificateError(ValueError):
    """Certificate does not validate against its graph"""


@dataclass(frozen=True)
class HamiltonCycle:
    cycle: OrientedCycle

    kind = CertificateKind.HAMILTON_CYCLE

    def validate(self, g):
        OrientedCycle(g, self.cycle.verts)
        if len(self.cycle) != g.n:
            raise CertificateError(f"Cycle of order {len(self.cycle)} misses vertices of {g}")
        return self

    def witness(self):
        return list(self.cycle)


@dataclass(frozen=True)
class CycleOfOrderP:
    cycle: OrientedCycle

    kind = CertificateKind.CYCLE_OF_ORDER_P

    def validate(self, g):
        OrientedCycle(g, self.cycle.verts)
        return self

    def witness(self):
        return list(self.cycle)


@dataclass(frozen=True)
class Refutation:
    """Independent set whose degree sum falls below the bound"""

    vertices: frozenset
    degree_sum: int
    bound: int

    kind = CertificateKind.REFUTATION

    def validate(self, g):
        if not g.is_independent(self.vertices):
            raise CertificateError(f"Refutation set {sorted(self.vertices)} is not independent")
        if g.degree_sum(self.vertices) != self.degree_sum:
            raise CertificateError(f"Recorded degree sum {self.degree_sum} is wrong")
        if not self.degree_sum < self.bound:
            raise CertificateError(f"Degree sum {self.degree_sum} is not below {self.bound}")
        return self

    def witness(self):
        return sorted(self.vertices)

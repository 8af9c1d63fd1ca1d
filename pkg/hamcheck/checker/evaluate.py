# -*- encoding: utf-8 -*-
import logging
from dataclasses import dataclass, field

from hamcheck.core.constants import Outcome
from hamcheck.invariants.extnat import ExtNat
from hamcheck.invariants.report import MissingAtomError

logger = logging.getLogger("hamcheck.checker.evaluate")

__all__ = ["CheckResult", "MissingAtomError", "evaluate", "hypothesis_met", "report_atoms"]


@dataclass(frozen=True)
class CheckResult:
    g6: str
    spec_id: str
    lam: int
    outcome: Outcome
    atoms: dict = field(hash=False)
    witness: dict = field(default=None, hash=False)

    @property
    def is_violation(self):
        return self.outcome == Outcome.VIOLATION

    def to_json(self):
        return {
            "g6": self.g6,
            "spec": self.spec_id,
            "lambda": self.lam,
            "outcome": str(self.outcome),
            "atoms": dict(self.atoms),
            "witness": self.witness,
        }

    def __str__(self):
        binding = f" lambda={self.lam}" if self.lam is not None else ""
        atoms = " ".join(f"{k}={v}" for k, v in self.atoms.items())
        return f"{self.spec_id}{binding} {self.g6}: {self.outcome} ({atoms})"


def report_atoms(spec, rep, lam=None):
    """Atom values a spec reads, JSON-ready, in a fixed key order"""
    atoms = {
        "n": rep.n,
        "p": rep.p,
        "c": rep.c,
        "kappa": rep.connectivity,
        "delta": rep.min_degree,
    }
    for k in sorted(spec.sigma_orders(lam)):
        atoms[f"sigma_{k}"] = rep.sigma_value(k).to_json()
    if lam is not None:
        atoms["lambda"] = lam
    if spec.predicates():
        atoms["hamiltonian"] = rep.is_hamiltonian
        atoms["dominating"] = rep.all_longest_cycles_dominating
    return atoms


def _violation_witness(rep):
    return {
        "path_witness": list(rep.longest_path_witness) if rep.longest_path_witness else [],
        "cycle_witness": list(rep.longest_cycle_witness) if rep.longest_cycle_witness else None,
    }


def _check_binding(spec, lam):
    if spec.is_parameterized:
        if lam is None:
            raise ValueError(f"{spec.id} needs a lambda binding")
        if lam < spec.lambda_min:
            raise ValueError(f"{spec.id} needs lambda >= {spec.lambda_min}, got {lam}")
    elif lam is not None:
        raise ValueError(f"{spec.id} takes no lambda, got {lam}")


def hypothesis_met(spec, rep, lam=None):
    """Connectivity floor and every hypothesis comparison hold"""
    _check_binding(spec, lam)
    if ExtNat(rep.connectivity) < spec.connectivity_floor.evaluate(rep, lam):
        return False
    return all(h.evaluate(rep, lam) for h in spec.hypothesis)


def evaluate(spec, rep, lam=None):
    """
    hypothesis-unmet when the connectivity floor or a hypothesis fails,
    otherwise the truth of the conclusion. Raises MissingAtomError when rep
    lacks a sigma_k the statement reads.
    """
    _check_binding(spec, lam)
    atoms = report_atoms(spec, rep, lam)
    if not hypothesis_met(spec, rep, lam):
        return CheckResult(rep.g6, spec.id, lam, Outcome.HYPOTHESIS_UNMET, atoms)

    verdict = spec.conclusion.evaluate(rep, lam)
    if verdict is None:
        logger.debug(f"{spec.id} on {rep.g6}: conclusion undecided")
        return CheckResult(rep.g6, spec.id, lam, Outcome.UNKNOWN, atoms)
    if verdict:
        return CheckResult(rep.g6, spec.id, lam, Outcome.HOLDS, atoms)
    return CheckResult(
        rep.g6,
        spec.id,
        lam,
        Outcome.VIOLATION,
        atoms,
        witness=dict(_violation_witness(rep), conclusion=str(spec.conclusion)),
    )

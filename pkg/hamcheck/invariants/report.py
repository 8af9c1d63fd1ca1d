# -*- encoding: utf-8 -*-
import logging
from dataclasses import dataclass, field

from hamcheck.core.constants import DEFAULT_CYCLE_CAP, DEFAULT_ORACLE_BOUND
from hamcheck.core.graph6 import to_graph6_string
from hamcheck.invariants.connectivity import connectivity, min_vertex_cut_bruteforce
from hamcheck.invariants.dominating import CapExceededError, all_longest_cycles_dominating
from hamcheck.invariants.independence import (
    independence_number,
    independence_number_bruteforce,
    sigma_k,
    sigma_k_bruteforce,
)
from hamcheck.invariants.longest import (
    longest_cycle,
    longest_cycle_bruteforce,
    longest_path,
    longest_path_bruteforce,
)

DEFAULT_SIGMAS = (2, 3)


class MissingAtomError(LookupError):
    """Report lacks a value an expression needs"""


@dataclass
class InvariantReport:
    graph: object = field(repr=False, compare=False)
    g6: str
    n: int
    m: int
    min_degree: int
    connectivity: int
    independence_number: int
    sigma: dict
    p: int
    c: int
    longest_path_witness: object = None
    longest_cycle_witness: object = None
    all_longest_cycles_dominating: object = None
    dominating_cap_exceeded: bool = False
    connected: bool = True

    logger = logging.getLogger("hamcheck.invariants.report")

    @property
    def diff(self):
        return self.p - self.c

    @property
    def is_hamiltonian(self):
        return self.c == self.p == self.n

    def sigma_value(self, k):
        try:
            return self.sigma[k]
        except KeyError:
            raise MissingAtomError(f"sigma_{k} not computed for {self.g6}") from None

    def ensure_sigma(self, ks):
        for k in ks:
            if k not in self.sigma:
                self.sigma[k] = sigma_k(self.graph, k)
        return self

    def resolve_dominating(self, cap=DEFAULT_CYCLE_CAP):
        """Fill all_longest_cycles_dominating; stays None when c < 3 or the cap is hit"""
        if self.all_longest_cycles_dominating is not None or self.dominating_cap_exceeded:
            return self.all_longest_cycles_dominating
        if self.c < 3:
            return None
        try:
            self.all_longest_cycles_dominating = all_longest_cycles_dominating(
                self.graph, cap=cap, c=self.c
            )
        except CapExceededError as e:
            self.logger.warning(f"{self.g6}: {e}")
            self.dominating_cap_exceeded = True
        return self.all_longest_cycles_dominating

    def to_json(self):
        return {
            "g6": self.g6,
            "n": self.n,
            "m": self.m,
            "delta": self.min_degree,
            "kappa": self.connectivity,
            "alpha": self.independence_number,
            "sigma": {str(k): self.sigma[k].to_json() for k in sorted(self.sigma)},
            "p": self.p,
            "c": self.c,
            "diff": self.diff,
            "hamiltonian": self.is_hamiltonian,
            "path_witness": list(self.longest_path_witness) if self.longest_path_witness else [],
            "cycle_witness": (
                list(self.longest_cycle_witness) if self.longest_cycle_witness else None
            ),
            "connected": self.connected,
        }


def report(g, ks=DEFAULT_SIGMAS, with_dominating=False, cap=DEFAULT_CYCLE_CAP):
    """All invariants of g; disconnected inputs are flagged, p and c are per-component maxima"""
    if g.n == 0:
        p, path, c, cycle = 0, None, 0, None
    else:
        p, path = longest_path(g)
        c, cycle = longest_cycle(g)
    rep = InvariantReport(
        graph=g,
        g6=to_graph6_string(g),
        n=g.n,
        m=g.m,
        min_degree=g.min_degree,
        connectivity=connectivity(g),
        independence_number=independence_number(g),
        sigma={k: sigma_k(g, k) for k in sorted(set(ks))},
        p=p,
        c=c,
        longest_path_witness=path,
        longest_cycle_witness=cycle,
        connected=g.is_connected(),
    )
    if with_dominating:
        rep.resolve_dominating(cap)
    return rep


def oracle_report(g, ks=DEFAULT_SIGMAS, oracle_bound=DEFAULT_ORACLE_BOUND):
    """Report from the exhaustive oracles only; no witnesses"""
    if g.n == 0:
        p = c = 0
    else:
        p = longest_path_bruteforce(g, oracle_bound)
        c = longest_cycle_bruteforce(g, oracle_bound)
    return InvariantReport(
        graph=g,
        g6=to_graph6_string(g),
        n=g.n,
        m=g.m,
        min_degree=g.min_degree,
        connectivity=min_vertex_cut_bruteforce(g, oracle_bound),
        independence_number=independence_number_bruteforce(g, oracle_bound),
        sigma={k: sigma_k_bruteforce(g, k, oracle_bound) for k in sorted(set(ks))},
        p=p,
        c=c,
        connected=g.is_connected(),
    )

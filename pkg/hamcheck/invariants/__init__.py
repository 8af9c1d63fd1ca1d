"""Exact invariants (p, c, kappa, alpha, sigma_k) with brute-force oracles."""

from hamcheck.invariants.connectivity import (
    OracleBoundError,
    connectivity,
    local_vertex_connectivity,
    min_vertex_cut_bruteforce,
)
from hamcheck.invariants.dominating import (
    CapExceededError,
    InvalidCycleError,
    all_longest_cycles_dominating,
    is_dominating_cycle,
)
from hamcheck.invariants.extnat import INFINITY, ExtNat
from hamcheck.invariants.independence import (
    independence_number,
    independence_number_bruteforce,
    maximum_independent_set,
    sigma_k,
    sigma_k_bruteforce,
)
from hamcheck.invariants.longest import (
    EmptyGraphError,
    longest_cycle,
    longest_cycle_bruteforce,
    longest_path,
    longest_path_bruteforce,
)
from hamcheck.invariants.report import InvariantReport, MissingAtomError, oracle_report, report

__all__ = [
    "CapExceededError",
    "EmptyGraphError",
    "ExtNat",
    "INFINITY",
    "InvalidCycleError",
    "InvariantReport",
    "MissingAtomError",
    "OracleBoundError",
    "all_longest_cycles_dominating",
    "connectivity",
    "independence_number",
    "independence_number_bruteforce",
    "is_dominating_cycle",
    "local_vertex_connectivity",
    "longest_cycle",
    "longest_cycle_bruteforce",
    "longest_path",
    "longest_path_bruteforce",
    "maximum_independent_set",
    "min_vertex_cut_bruteforce",
    "oracle_report",
    "report",
    "sigma_k",
    "sigma_k_bruteforce",
]

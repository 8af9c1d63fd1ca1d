"""Certificates for sigma_2 >= p and the cycle-extension move catalog."""

from hamcheck.constructive.certificate import (
    CertificateError,
    CycleOfOrderP,
    HamiltonCycle,
    Refutation,
)
from hamcheck.constructive.moves import (
    CATALOG,
    Move,
    MoveError,
    find_move,
    improve_cycle,
    improve_to_fixpoint,
    move_absorb,
    move_chord_pair,
    move_crossing_case1,
    move_rotation_case22,
)
from hamcheck.constructive.ore import (
    DisconnectedGraphError,
    GraphTooSmallError,
    PathClosureError,
    SolverContradictionError,
    certify_theorem1,
    ore_close,
)
from hamcheck.constructive.seed import seed_cycle

__all__ = [
    "CATALOG",
    "CertificateError",
    "CycleOfOrderP",
    "DisconnectedGraphError",
    "GraphTooSmallError",
    "HamiltonCycle",
    "Move",
    "MoveError",
    "PathClosureError",
    "Refutation",
    "SolverContradictionError",
    "certify_theorem1",
    "find_move",
    "improve_cycle",
    "improve_to_fixpoint",
    "move_absorb",
    "move_chord_pair",
    "move_crossing_case1",
    "move_rotation_case22",
    "ore_close",
    "seed_cycle",
]

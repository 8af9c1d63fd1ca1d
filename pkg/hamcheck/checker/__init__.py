"""Theorem registry, evaluation over invariant reports, corpora and sweeps.

The sweep entry point lives in hamcheck.checker.sweep; the package attribute
of that name stays the submodule.
"""

from hamcheck.checker.corpus import (
    EnumerationCeilingError,
    GraphFilter,
    enumerate_labeled,
    enumerate_orders,
    parse_filter,
    random_graphs,
    read_corpus,
)
from hamcheck.checker.evaluate import CheckResult, MissingAtomError, evaluate, hypothesis_met
from hamcheck.checker.registry import (
    TheoremSpec,
    UnknownSpecError,
    get_spec,
    registry,
    select_specs,
)
from hamcheck.checker.sweep import (
    OracleMismatchError,
    SweepReport,
    SweepWorkerError,
    check_graph,
)

__all__ = [
    "CheckResult",
    "EnumerationCeilingError",
    "GraphFilter",
    "MissingAtomError",
    "OracleMismatchError",
    "SweepReport",
    "SweepWorkerError",
    "TheoremSpec",
    "UnknownSpecError",
    "check_graph",
    "enumerate_labeled",
    "enumerate_orders",
    "evaluate",
    "get_spec",
    "hypothesis_met",
    "parse_filter",
    "random_graphs",
    "read_corpus",
    "registry",
    "select_specs",
]

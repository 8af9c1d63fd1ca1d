# -*- encoding: utf-8 -*-
"""Corpus sweeps: per-graph evaluation fanned out to worker processes, merged in input order"""
import functools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from hamcheck.core.constants import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_CYCLE_CAP,
    DEFAULT_ORACLE_BOUND,
    Outcome,
    Predicate,
    SpecStatus,
)
from hamcheck.checker.evaluate import evaluate, hypothesis_met
from hamcheck.checker.registry import get_spec
from hamcheck.invariants.report import oracle_report, report

logger = logging.getLogger("hamcheck.checker.sweep")

OUTCOMES = (Outcome.HYPOTHESIS_UNMET, Outcome.HOLDS, Outcome.VIOLATION, Outcome.UNKNOWN)
EVIDENCE_NOTE = "conjecture results are evidence over the swept corpus, not proof"


class SweepWorkerError(RuntimeError):
    """A worker failed on a graph; carries its graph6 string"""

    def __init__(self, message, g6=None):
        self.message = message
        self.g6 = g6
        super().__init__(f"{g6}: {message}" if g6 else message)

    def __reduce__(self):
        return (type(self), (self.message, self.g6))


class OracleMismatchError(SweepWorkerError):
    """A theorem violation did not reproduce under the brute-force oracles"""


@dataclass(frozen=True)
class SweepSettings:
    spec_ids: tuple
    lambda_start: int = None
    lambda_stop: int = None
    cap: int = DEFAULT_CYCLE_CAP
    oracle_bound: int = DEFAULT_ORACLE_BOUND


def _required_sigmas(specs, rep, settings):
    ks = set()
    for spec in specs:
        for lam in spec.lambda_values(rep.connectivity, settings.lambda_start, settings.lambda_stop):
            ks |= spec.sigma_orders(lam)
    return ks


def _confirm_violation(g, spec, lam, settings):
    """Rebuild the report from the exhaustive oracles and re-evaluate"""
    if g.n > settings.oracle_bound:
        logger.warning(f"{spec.id} violation on order {g.n} above oracle bound, not reconfirmed")
        return
    rep = oracle_report(g, sorted(spec.sigma_orders(lam)), settings.oracle_bound)
    if Predicate.DOMINATING in spec.predicates():
        rep.resolve_dominating(settings.cap)
    confirmed = evaluate(spec, rep, lam)
    if not confirmed.is_violation:
        raise OracleMismatchError(
            f"{spec.id} (lambda={lam}) fails on the pruned report but is {confirmed.outcome} "
            "under the oracles: an invariant engine is wrong",
            rep.g6,
        )


def check_graph(g, settings):
    """Every (spec, lambda) CheckResult for one graph, in registry then lambda order"""
    rep = None
    try:
        specs = [get_spec(spec_id) for spec_id in settings.spec_ids]
        rep = report(g, ks=())
        rep.ensure_sigma(sorted(_required_sigmas(specs, rep, settings)))
        results = []
        for spec in specs:
            for lam in spec.lambda_values(
                rep.connectivity, settings.lambda_start, settings.lambda_stop
            ):
                if Predicate.DOMINATING in spec.predicates() and hypothesis_met(spec, rep, lam):
                    rep.resolve_dominating(settings.cap)
                result = evaluate(spec, rep, lam)
                if result.is_violation and spec.status == SpecStatus.THEOREM:
                    _confirm_violation(g, spec, lam, settings)
                results.append(result)
        return results
    except SweepWorkerError:
        raise
    except Exception as e:
        g6 = rep.g6 if rep is not None else None
        raise SweepWorkerError(f"{type(e).__name__}: {e}", g6) from e


@dataclass
class SweepReport:
    """Outcome counts per (spec, lambda) plus every violation, merged associatively"""

    spec_order: tuple
    statuses: dict = field(default_factory=dict)
    tallies: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    graphs: int = 0

    @classmethod
    def empty(cls, specs, lambda_start=None, lambda_stop=None):
        output = cls(tuple(s.id for s in specs), {s.id: s.status for s in specs})
        for spec in specs:
            if not spec.is_parameterized:
                output.tallies[(spec.id, None)] = Counter()
            elif lambda_stop is not None:
                for lam in spec.lambda_values(lambda_stop, lambda_start, lambda_stop):
                    output.tallies[(spec.id, lam)] = Counter()
        return output

    def add(self, results):
        self.graphs += 1
        for result in results:
            self.tallies.setdefault((result.spec_id, result.lam), Counter())[result.outcome] += 1
            if result.is_violation:
                self.violations.append(result)
        return self

    def merge(self, other):
        merged = SweepReport(self.spec_order, dict(self.statuses))
        merged.statuses.update(other.statuses)
        for source in (self, other):
            for key, counts in source.tallies.items():
                merged.tallies.setdefault(key, Counter()).update(counts)
        merged.violations = self.violations + other.violations
        merged.graphs = self.graphs + other.graphs
        return merged

    def _sort_key(self, key):
        spec_id, lam = key
        index = self.spec_order.index(spec_id) if spec_id in self.spec_order else len(self.spec_order)
        return (index, spec_id, -1 if lam is None else lam)

    def rows(self):
        """One dict per (spec, lambda) in registry then lambda order"""
        for key in sorted(self.tallies, key=self._sort_key):
            spec_id, lam = key
            counts = self.tallies[key]
            row = {"spec": spec_id, "status": str(self.statuses.get(spec_id, "")), "lambda": lam}
            row.update({str(outcome): counts.get(outcome, 0) for outcome in OUTCOMES})
            yield row

    @property
    def violation_count(self):
        return len(self.violations)

    @property
    def has_conjectures(self):
        return SpecStatus.CONJECTURE in self.statuses.values()

    def to_json(self):
        output = {
            "graphs": self.graphs,
            "tallies": list(self.rows()),
            "violations": [v.to_json() for v in self.violations],
        }
        if self.has_conjectures:
            output["note"] = EVIDENCE_NOTE
        return output


def _batches(corpus, size):
    iterator = iter(corpus)
    while batch := list(islice(iterator, size)):
        yield batch


def iter_results(corpus, settings, jobs=1, chunk_size=DEFAULT_CHUNK_SIZE):
    """Per-graph result lists in corpus order, whatever the worker count"""
    worker = functools.partial(check_graph, settings=settings)
    if jobs <= 1:
        for g in corpus:
            yield worker(g)
        return
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        # at most one batch of graphs is pending at a time
        for batch in _batches(corpus, chunk_size * jobs * 4):
            yield from executor.map(worker, batch, chunksize=chunk_size)


def sweep(
    corpus,
    specs,
    lambda_range=(None, None),
    jobs=1,
    cap=DEFAULT_CYCLE_CAP,
    oracle_bound=DEFAULT_ORACLE_BOUND,
    chunk_size=DEFAULT_CHUNK_SIZE,
):
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    lambda_start, lambda_stop = lambda_range
    settings = SweepSettings(tuple(s.id for s in specs), lambda_start, lambda_stop, cap, oracle_bound)
    output = SweepReport.empty(specs, lambda_start, lambda_stop)
    for results in iter_results(corpus, settings, jobs, chunk_size):
        output.add(results)
        for result in results:
            if result.is_violation:
                logger.error(f"violation: {result}")
    logger.info(
        f"swept {output.graphs} graphs against {len(specs)} specs: {output.violation_count} violations"
    )
    return output

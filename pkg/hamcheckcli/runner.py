# -*- encoding: utf-8 -*-
"""Command implementations; every command returns an ExitCode"""
import logging

from hamcheck.checker.corpus import (
    EnumerationCeilingError,
    enumerate_orders,
    random_graphs,
)
from hamcheck.checker.registry import UnknownSpecError, select_specs
from hamcheck.checker.sweep import EVIDENCE_NOTE, SweepSettings, iter_results, sweep
from hamcheck.constructive.moves import improve_to_fixpoint
from hamcheck.constructive.ore import certify_theorem1
from hamcheck.constructive.seed import seed_cycle
from hamcheck.core.constants import ExitCode, OutputFormat
from hamcheck.core.graph import GraphError
from hamcheck.core.graph6 import Graph6Error, read_graph6_file, to_graph6_string
from hamcheck.invariants.connectivity import OracleBoundError
from hamcheck.invariants.longest import longest_cycle
from hamcheck.invariants.report import report
from hamcheckcli.config import ConfigError
from hamcheckcli.output import OutputWriter


class AcyclicGraphError(ValueError):
    """improve needs a graph with a cycle"""


INPUT_ERRORS = (
    Graph6Error,
    GraphError,
    UnknownSpecError,
    EnumerationCeilingError,
    OracleBoundError,
    AcyclicGraphError,
    ConfigError,
    OSError,
)


class Runner:
    """the main working class, runs one command over one graph stream"""

    logger = logging.getLogger("hamcheck.cli.runner")

    def __init__(self, config, stream=None):
        self.config = config
        self.stream = stream

    def run(self):
        command = getattr(self, f"cmd_{self.config.command}")
        try:
            with OutputWriter(self.config.output_format, self.config.out, self.stream) as writer:
                return command(writer)
        except INPUT_ERRORS as e:
            self.logger.error(f"{type(e).__name__}: {e}")
            return ExitCode.INPUT
        except Exception as e:
            self.logger.exception(f"Internal error: {e}")
            return ExitCode.INTERNAL

    def graphs(self):
        """The configured input stream, graphs below min_order dropped"""
        cfg = self.config
        if cfg.enumerate is not None:
            yield from enumerate_orders(cfg.min_order, cfg.enumerate, cfg.graph_filter)
            return
        if cfg.random is not None:
            low, high = cfg.orders
            stream = random_graphs(
                cfg.random, range(low, high + 1), cfg.edge_probs, cfg.seed, cfg.graph_filter
            )
            source = "random corpus"
        else:
            stream = self._read_files()
            source = "input files"
        for g in stream:
            if g.n < cfg.min_order:
                self.logger.warning(f"Skipping {to_graph6_string(g)} from {source}: order {g.n} < {cfg.min_order}")
                continue
            yield g

    def _read_files(self):
        for path in self.config.inputs:
            for _, _, g in read_graph6_file(path):
                if self.config.graph_filter(g):
                    yield g

    def _settings(self, specs):
        start, stop = self.config.lambda_range
        return SweepSettings(
            tuple(s.id for s in specs), start, stop, self.config.cap, self.config.oracle_bound
        )

    def cmd_invariants(self, writer):
        cfg = self.config
        for g in self.graphs():
            rep = report(g, ks=cfg.sigma, with_dominating=cfg.dominating, cap=cfg.cap)
            record = rep.to_json()
            if cfg.dominating:
                record["dominating"] = rep.all_longest_cycles_dominating
            writer.write(record)
        return ExitCode.OK

    def cmd_check(self, writer):
        cfg = self.config
        specs = select_specs(cfg.specs)
        violations = 0
        for results in iter_results(self.graphs(), self._settings(specs), cfg.jobs, cfg.chunk_size):
            for result in results:
                writer.write(result.to_json())
                if result.is_violation:
                    violations += 1
                    self.logger.error(f"violation: {result}")
        return ExitCode.VIOLATION if violations else ExitCode.OK

    def cmd_sweep(self, writer):
        cfg = self.config
        specs = select_specs(cfg.specs)
        result = sweep(
            self.graphs(),
            specs,
            cfg.lambda_range,
            jobs=cfg.jobs,
            cap=cfg.cap,
            oracle_bound=cfg.oracle_bound,
            chunk_size=cfg.chunk_size,
        )
        if cfg.output_format == OutputFormat.JSON:
            writer.write(result.to_json())
        else:
            graph_class = str(cfg.graph_filter)
            for row in result.rows():
                writer.write(dict(row, graph_class=graph_class))
            for violation in result.violations:
                writer.note(f"VIOLATION {violation}")
            if result.has_conjectures:
                writer.note(EVIDENCE_NOTE)
        return ExitCode.VIOLATION if result.violation_count else ExitCode.OK

    def cmd_certify(self, writer):
        for g in self.graphs():
            g6 = to_graph6_string(g)
            if g.n < 3 or not g.is_connected():
                self.logger.warning(f"Skipping {g6}: certification needs a connected graph of order >= 3")
                continue
            certificate = certify_theorem1(g)
            record = {"g6": g6, "result": str(certificate.kind), "witness": certificate.witness()}
            if hasattr(certificate, "degree_sum"):
                record["degree_sum"] = certificate.degree_sum
                record["bound"] = certificate.bound
            writer.write(record)
        return ExitCode.OK

    def cmd_improve(self, writer):
        for g in self.graphs():
            g6 = to_graph6_string(g)
            seed = seed_cycle(g)
            if seed is None:
                raise AcyclicGraphError(f"{g6} has no cycle to improve")
            cycle, trace = improve_to_fixpoint(g, seed)
            exact_c = gap = None
            if self.config.exact:
                exact_c, _ = longest_cycle(g)
                gap = exact_c - len(cycle)
            writer.write(
                {
                    "g6": g6,
                    "seed": len(seed),
                    "length": len(cycle),
                    "cycle": list(cycle),
                    "trace": [move.to_json() for move in trace],
                    "exact_c": exact_c,
                    "gap": gap,
                }
            )
        return ExitCode.OK

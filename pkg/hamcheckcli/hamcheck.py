#!/usr/bin/env python3
"""this is the main entry point, which sets up the Runner class"""

import argparse
import logging
import sys

from hamcheck.core.constants import ExitCode
from hamcheckcli.config import ConfigError, ConfigManager
from hamcheckcli.runner import Runner

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s: %(message)s"

_handlers = []


def _common_arguments():
    parser = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    parser.add_argument("inputs", help="graph6 file[s]", nargs="*")
    source = parser.add_argument_group("input")
    source.add_argument("--enumerate", type=int, metavar="N",
                        help="all labeled graphs of order min-order..N")
    source.add_argument("--random", type=int, metavar="COUNT", help="COUNT seeded G(n, q) samples")
    source.add_argument("--orders", metavar="A..B", help="orders for --random")
    source.add_argument("--edge-prob", dest="edge_prob", metavar="P,..",
                        help="edge probabilities for --random")
    source.add_argument("--seed", type=int, help="base seed for --random")
    source.add_argument("--filter", help="connected | 2-connected | k-connected=K | none")
    source.add_argument("--min-order", dest="min_order", type=int, help="skip smaller graphs")
    source.add_argument("--include-small", dest="include_small", action="store_true",
                        help="keep graphs of order < 3")
    run = parser.add_argument_group("run")
    run.add_argument("--jobs", type=int, help="worker processes (default $HAMCHECK_JOBS or 1)")
    run.add_argument("--cap", type=int, help="longest-cycle enumeration cap")
    run.add_argument("--oracle-bound", dest="oracle_bound", type=int,
                     help="largest order the brute-force oracles accept")
    run.add_argument("--chunk-size", dest="chunk_size", type=int, help="graphs per worker task")
    run.add_argument("--format", choices=("json", "csv", "human"), help="output format")
    run.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    run.add_argument("--config", action="append", metavar="PATH", help="additional config file")
    run.add_argument("--debug", help="enable console debugging", action="store_true")
    run.add_argument("--logfile", help="set log file location")
    return parser


def parse_args(argv=None):
    """Parse command line arguments."""
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="hamcheck", description="Hamiltonicity invariants and theorem checks over graph6 corpora"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    invariants = commands.add_parser("invariants", parents=[common], argument_default=argparse.SUPPRESS,
                                     help="one JSON report per graph")
    invariants.add_argument("--sigma", metavar="K,..", help="sigma_k orders to report")
    invariants.add_argument("--dominating", action="store_true",
                            help="decide whether every longest cycle is dominating")

    for name, description in (("check", "per-graph results"), ("sweep", "aggregated tallies")):
        sub = commands.add_parser(name, parents=[common], argument_default=argparse.SUPPRESS,
                                  help=f"evaluate theorems and conjectures, {description}")
        sub.add_argument("--specs", help="all | theorems | conjectures | comma-separated ids")
        sub.add_argument("--lambda", metavar="A..B", help="lambda range for parameterized specs")

    commands.add_parser("certify", parents=[common], argument_default=argparse.SUPPRESS,
                        help="Hamilton cycle or refutation pair per graph")
    improve = commands.add_parser("improve", parents=[common], argument_default=argparse.SUPPRESS,
                                  help="grow a seed cycle with the move catalog")
    improve.add_argument("--exact", action="store_true", help="compare with the exact c")

    args = vars(parser.parse_args(argv))
    return args


def setup_logging(log_filename="", log_level=logging.INFO):
    """initialize python logging infrastructure; stdout carries data, logs go to stderr"""
    log_formatter = logging.Formatter(LOG_FORMAT)
    root = logging.getLogger()
    for handler in _handlers:
        root.removeHandler(handler)
        handler.close()
    _handlers.clear()

    root.setLevel(log_level)
    log_console = logging.StreamHandler(sys.stderr)
    log_console.setFormatter(log_formatter)
    log_console.setLevel(log_level)
    root.addHandler(log_console)
    _handlers.append(log_console)
    if log_filename:
        log_file = logging.FileHandler(log_filename)
        log_file.setLevel(log_level)
        log_file.setFormatter(log_formatter)
        root.addHandler(log_file)
        _handlers.append(log_file)
        logging.info(f"Logging to file: {log_filename}")


def main(argv=None, environ=None, stream=None):
    """entry point if called as an executable; returns the exit code"""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK if not e.code else ExitCode.INPUT

    config_manager = ConfigManager(args, environ)
    logger = logging.getLogger("hamcheck.cli")
    try:
        config_manager.load_config_file()
        setup_logging(config_manager.logging_file, config_manager.logging_level)
        run_config = config_manager.run_config()
    except (ConfigError, OSError) as e:
        logger.error(f"Configuration error: {e}")
        return ExitCode.INPUT

    logger.debug(f"Run config: {run_config}")
    return Runner(run_config, stream).run()


# check for execution
if __name__ == "__main__":
    sys.exit(main())

# -*- encoding: utf-8 -*-
"""Configuration: built-in defaults < [CONFIG] of config files < HAMCHECK_JOBS < command-line flags"""
import logging
import os
from configparser import ConfigParser, Error as ConfigParserError
from dataclasses import dataclass, field
from pathlib import Path

from hamcheck.checker.corpus import GraphFilter, parse_filter
from hamcheck.core.constants import (
    DEFAULT_CHUNK_SIZE,
    DEFAULT_CYCLE_CAP,
    DEFAULT_MIN_ORDER,
    DEFAULT_ORACLE_BOUND,
    OutputFormat,
)

JOBS_ENV = "HAMCHECK_JOBS"
CONFIG_SECTION = "CONFIG"
CONFIG_KEYS = ("jobs", "cap", "oracle_bound", "chunk_size", "debug", "logfile", "format")
COMMANDS = ("invariants", "check", "sweep", "certify", "improve")

conf = {
    "debug": False,
    "config": ["/etc/hamcheck.conf", "~/.config/hamcheck.conf", "./hamcheck.conf"],
    "logfile": None,
    "jobs": 1,
    "cap": DEFAULT_CYCLE_CAP,
    "oracle_bound": DEFAULT_ORACLE_BOUND,
    "chunk_size": DEFAULT_CHUNK_SIZE,
    "format": "json",
    "filter": "none",
    "min_order": DEFAULT_MIN_ORDER,
    "include_small": False,
    "specs": "all",
    "sigma": "2,3",
    "dominating": False,
    "exact": False,
    "orders": "8..10",
    "edge_prob": "0.2,0.5,0.8",
    "seed": 0,
}


class ConfigError(ValueError):
    """Invalid configuration value or combination of flags"""


def parse_range(text):
    """'A..B', 'A..' or 'A' to (A, B); B is None when open"""
    text = str(text).strip()
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = (int(high) if high else None) if sep else start
    except ValueError:
        raise ConfigError(f"Bad range {text!r}, expected A..B") from None
    if start < 0 or (stop is not None and stop < start):
        raise ConfigError(f"Bad range {text!r}")
    return start, stop


def parse_int_list(text):
    try:
        values = [int(part) for part in str(text).split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"Bad integer list {text!r}") from None
    if not values:
        raise ConfigError("Empty integer list")
    return values


def parse_float_list(text):
    try:
        values = [float(part) for part in str(text).split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"Bad probability list {text!r}") from None
    if not values or not all(0.0 <= q <= 1.0 for q in values):
        raise ConfigError(f"Edge probabilities must lie in [0, 1], got {text!r}")
    return values


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    enumerate: int = None
    random: int = None
    orders: tuple = (8, 10)
    edge_probs: list = field(default_factory=lambda: [0.2, 0.5, 0.8])
    seed: int = 0
    graph_filter: GraphFilter = field(default_factory=GraphFilter)
    min_order: int = DEFAULT_MIN_ORDER
    specs: str = "all"
    lambda_range: tuple = (None, None)
    jobs: int = 1
    cap: int = DEFAULT_CYCLE_CAP
    oracle_bound: int = DEFAULT_ORACLE_BOUND
    chunk_size: int = DEFAULT_CHUNK_SIZE
    output_format: OutputFormat = OutputFormat.JSON
    out: str = None
    sigma: list = field(default_factory=lambda: [2, 3])
    dominating: bool = False
    exact: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command {self.command!r}")
        sources = [bool(self.inputs), self.enumerate is not None, self.random is not None]
        if sum(sources) != 1:
            raise ConfigError("Exactly one input source required: graph6 files, --enumerate or --random")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        for name in ("cap", "oracle_bound", "chunk_size"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.enumerate is not None and self.enumerate < 0:
            raise ConfigError(f"--enumerate needs N >= 0, got {self.enumerate}")
        if self.random is not None and self.random < 0:
            raise ConfigError(f"--random needs COUNT >= 0, got {self.random}")
        if any(k < 1 for k in self.sigma):
            raise ConfigError(f"sigma_k needs k >= 1, got {self.sigma}")


class ConfigManager:
    logger = logging.getLogger("hamcheck.cli.config")

    def __init__(self, flags, environ=None):
        self.flags = flags
        self.environ = os.environ if environ is None else environ
        self.explicit_files = list(flags.get("config", []))
        self.config_files = conf["config"] + self.explicit_files
        self.global_config = {}

    @property
    def settings(self):
        """defaults, then config files, then environment, then flags"""
        merged = dict(conf)
        merged.update(self.global_config)
        if jobs := self.environ.get(JOBS_ENV):
            if not jobs.strip().isdigit():
                raise ConfigError(f"{JOBS_ENV} must be a positive integer, got {jobs!r}")
            merged["jobs"] = int(jobs)
        merged.update(self.flags)
        return merged

    @property
    def logging_level(self):
        return logging.DEBUG if self.settings.get("debug") else logging.INFO

    @property
    def logging_file(self):
        return self.settings.get("logfile")

    @staticmethod
    def config_parse_value(v):
        if v.isdigit():
            return int(v)
        elif v.lower() in ("true", "yes"):
            return True
        elif v.lower() in ("false", "no"):
            return False
        return v

    def load_config_file(self):
        """load the [CONFIG] section of every existing config file, later files win"""
        self.global_config = {}
        config_parser = ConfigParser(inline_comment_prefixes=("#", ";"), interpolation=None)
        for conf_file in self.config_files:
            path = Path(conf_file).expanduser()
            if not path.is_file():
                log = self.logger.warning if conf_file in self.explicit_files else self.logger.debug
                log(f"Config file {path} does not exist, skipping")
                continue
            self.logger.info(f"Loading config file {path}")
            try:
                if not config_parser.read(path):
                    raise ConfigError(f"Cannot read config file: {path}")
            except ConfigParserError as e:
                raise ConfigError(f"Malformed config file {path}: {e}") from e
            for section in config_parser.sections():
                if section != CONFIG_SECTION:
                    self.logger.warning(f"Ignoring section [{section}] in {path}")
                    continue
                for key in config_parser[section]:
                    if key not in CONFIG_KEYS:
                        self.logger.warning(f"Ignoring unknown key {key} in {path}")
                        continue
                    self.global_config[key] = self.config_parse_value(config_parser[section][key])
        self.logger.debug(f"Global config: {self.global_config}")

    def run_config(self):
        s = self.settings
        try:
            output_format = OutputFormat(s["format"])
        except ValueError:
            raise ConfigError(f"Unknown output format {s['format']!r}") from None
        try:
            graph_filter = parse_filter(s["filter"])
        except ValueError as e:
            raise ConfigError(str(e)) from e
        lambda_range = parse_range(s["lambda"]) if s.get("lambda") else (None, None)
        orders = parse_range(s["orders"])
        if orders[1] is None:
            raise ConfigError(f"--orders needs a closed range, got {s['orders']!r}")
        for name in ("jobs", "cap", "oracle_bound", "chunk_size", "seed", "min_order"):
            if not isinstance(s[name], int):
                raise ConfigError(f"{name} must be an integer, got {s[name]!r}")
        return RunConfig(
            command=s["command"],
            inputs=list(s.get("inputs", [])),
            enumerate=s.get("enumerate"),
            random=s.get("random"),
            orders=orders,
            edge_probs=parse_float_list(s["edge_prob"]),
            seed=s["seed"],
            graph_filter=graph_filter,
            min_order=0 if s["include_small"] else s["min_order"],
            specs=s["specs"],
            lambda_range=lambda_range,
            jobs=s["jobs"],
            cap=s["cap"],
            oracle_bound=s["oracle_bound"],
            chunk_size=s["chunk_size"],
            output_format=output_format,
            out=s.get("out"),
            sigma=parse_int_list(s["sigma"]),
            dominating=bool(s["dominating"]),
            exact=bool(s["exact"]),
        )

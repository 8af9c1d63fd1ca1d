# -*- encoding: utf-8 -*-
"""Single writer for every command: line-delimited JSON, CSV with a header row, or key=value lines"""
import csv
import json
import logging
import sys
from pathlib import Path

from hamcheck.core.constants import OutputFormat


def flatten(record, prefix=""):
    """Nested dicts become prefix_key columns, lists become space-separated strings"""
    output = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            output.update(flatten(value, prefix=f"{name}_"))
        elif isinstance(value, (list, tuple)):
            output[name] = " ".join(str(v) for v in value)
        elif value is None:
            output[name] = ""
        else:
            output[name] = value
    return output


class OutputWriter:
    logger = logging.getLogger("hamcheck.cli.output")

    def __init__(self, output_format=OutputFormat.JSON, path=None, stream=None):
        self.output_format = OutputFormat(output_format)
        self.path = Path(path) if path else None
        self._stream = stream
        self._file = None
        self._csv = None
        self.records = 0

    def __enter__(self):
        if self.path is not None:
            self._file = self.path.open("w", encoding="utf-8", newline="")
            self._stream = self._file
            self.logger.info(f"Writing {self.output_format} output to {self.path}")
        elif self._stream is None:
            self._stream = sys.stdout
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        if self._file is not None:
            self._file.close()
        else:
            self._stream.flush()
        return False

    def write(self, record):
        """One record: a JSON object per line, a CSV row or a human-readable line"""
        if self.output_format == OutputFormat.JSON:
            self._stream.write(json.dumps(record, separators=(", ", ": ")) + "\n")
        elif self.output_format == OutputFormat.CSV:
            row = flatten(record)
            if self._csv is None:
                self._csv = csv.DictWriter(self._stream, fieldnames=list(row), extrasaction="ignore",
                                           lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow(row)
        else:
            self._stream.write(" ".join(f"{k}={v}" for k, v in flatten(record).items() if v != "") + "\n")
        self.records += 1

    def note(self, text):
        """Free text; only the human format carries it"""
        if self.output_format == OutputFormat.HUMAN:
            self._stream.write(f"# {text}\n")

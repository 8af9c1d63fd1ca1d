# -*- encoding: utf-8 -*-
"""graph6 reader and writer, bit-exact with nauty's formats.txt"""
import logging
from pathlib import Path

from hamcheck.core.constants import (
    GRAPH6_BIAS,
    GRAPH6_CHUNK_BITS,
    GRAPH6_HEADER,
    GRAPH6_LONG_MARKER,
    GRAPH6_MAX_BYTE,
    GRAPH6_MAX_ORDER,
    GRAPH6_MEDIUM_MAX,
    GRAPH6_SHORT_MAX,
)
from hamcheck.core.graph import Graph
from hamcheck.utils import from_bitarray, to_bitarray

logger = logging.getLogger("hamcheck.core.graph6")


class Graph6Error(ValueError):
    """Malformed graph6 record"""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        if line is not None:
            message = f"{source or '<input>'}:{line}: {message}"
        super().__init__(message)


def _body_length(n):
    triangle = n * (n - 1) // 2
    return (triangle + GRAPH6_CHUNK_BITS - 1) // GRAPH6_CHUNK_BITS


def _check_bytes(record, start, end):
    for i in range(start, end):
        if not GRAPH6_BIAS <= record[i] <= GRAPH6_MAX_BYTE:
            raise Graph6Error(f"Byte {record[i]} at offset {i} out of range 63..126")


def _parse_order(record):
    """Return (n, header length)"""
    if not record:
        raise Graph6Error("Empty record")
    _check_bytes(record, 0, 1)
    if record[0] != GRAPH6_LONG_MARKER:
        return record[0] - GRAPH6_BIAS, 1
    if len(record) >= 2 and record[1] == GRAPH6_LONG_MARKER:
        width = 6
        start = 2
    else:
        width = 3
        start = 1
    if len(record) < start + width:
        raise Graph6Error("Truncated long-form header")
    _check_bytes(record, start, start + width)
    n = 0
    for i in range(start, start + width):
        n = (n << GRAPH6_CHUNK_BITS) | (record[i] - GRAPH6_BIAS)
    return n, start + width


def parse_graph6(record):
    """
    Parse one graph6 record (bytes, trailing newline tolerated) into a Graph.
    The upper triangle is read column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    """
    if isinstance(record, str):
        try:
            record = record.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6Error(f"Non-ASCII record: {e}") from e
    record = bytes(record).rstrip(b"\r\n")
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):]
    n, offset = _parse_order(record)
    expected = _body_length(n)
    body = record[offset:]
    if len(body) < expected:
        raise Graph6Error(f"Truncated record: {len(body)} body bytes, expected {expected}")
    if len(body) > expected:
        raise Graph6Error(f"Trailing garbage: {len(body) - expected} extra bytes")
    _check_bytes(body, 0, len(body))

    adj = [set() for _ in range(n)]
    u, v = 0, 1
    triangle = n * (n - 1) // 2
    position = 0
    for byte in body:
        for bit in to_bitarray(byte - GRAPH6_BIAS, GRAPH6_CHUNK_BITS):
            if position >= triangle:
                if bit:
                    raise Graph6Error("Nonzero padding bits")
                continue
            if bit:
                adj[u].add(v)
                adj[v].add(u)
            position += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, adj)


def _encode_order(n):
    if n <= GRAPH6_SHORT_MAX:
        return [n + GRAPH6_BIAS]
    if n <= GRAPH6_MEDIUM_MAX:
        width, prefix = 3, [GRAPH6_LONG_MARKER]
    elif n <= GRAPH6_MAX_ORDER:
        width, prefix = 6, [GRAPH6_LONG_MARKER, GRAPH6_LONG_MARKER]
    else:
        raise Graph6Error(f"Order {n} exceeds graph6 range")
    return prefix + [
        ((n >> (GRAPH6_CHUNK_BITS * i)) & 0x3F) + GRAPH6_BIAS
        for i in reversed(range(width))
    ]


def write_graph6(g):
    """Canonical graph6 record for g: shortest header, zero padding, no newline"""
    ords = _encode_order(g.n)
    chunk = []
    for v in range(1, g.n):
        for u in range(v):
            chunk.append(g.has_edge(u, v))
            if len(chunk) == GRAPH6_CHUNK_BITS:
                ords.append(from_bitarray(chunk) + GRAPH6_BIAS)
                chunk = []
    if chunk:
        chunk.extend([False] * (GRAPH6_CHUNK_BITS - len(chunk)))
        ords.append(from_bitarray(chunk) + GRAPH6_BIAS)
    return bytes(ords)


def to_graph6_string(g):
    return write_graph6(g).decode("ascii")


def iter_graph6_lines(lines, source=None):
    """
    Yield (line number, record, Graph) for every non-blank record of a
    newline-separated stream; an optional >>graph6<< header is skipped.
    """
    for number, line in enumerate(lines, start=1):
        if isinstance(line, str):
            try:
                line = line.encode("ascii")
            except UnicodeEncodeError as e:
                raise Graph6Error(f"Non-ASCII record: {e}", line=number, source=source) from e
        record = line.strip()
        if number == 1 and record.startswith(GRAPH6_HEADER):
            record = record[len(GRAPH6_HEADER):]
        if not record:
            continue
        try:
            yield number, record, parse_graph6(record)
        except Graph6Error as e:
            raise Graph6Error(str(e), line=number, source=source) from e


def read_graph6_file(path):
    path = Path(path)
    logger.info(f"Reading graph6 records from {path}")
    with path.open("rb") as f:
        yield from iter_graph6_lines(f, source=str(path))

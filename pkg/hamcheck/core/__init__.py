"""Graph representation, graph6 I/O and oriented path/cycle algebra."""

from hamcheck.core.graph import Graph, GraphError, is_independent
from hamcheck.core.graph6 import (
    Graph6Error,
    parse_graph6,
    read_graph6_file,
    to_graph6_string,
    write_graph6,
)
from hamcheck.core.oriented import (
    OrientationError,
    OrientedCycle,
    OrientedPath,
    Segment,
    SpliceError,
    predecessor,
    segment,
    splice,
    successor,
)

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "OrientationError",
    "OrientedCycle",
    "OrientedPath",
    "Segment",
    "SpliceError",
    "is_independent",
    "parse_graph6",
    "predecessor",
    "read_graph6_file",
    "segment",
    "splice",
    "successor",
    "to_graph6_string",
    "write_graph6",
]

# -*- encoding: utf-8 -*-
"""
Oriented paths and cycles with the successor/predecessor algebra used by
the proof constructions: u+ and u-, lifted sets U+ and U-, and segments
u->v / v<-u read both as vertex sequences and as vertex sets.
"""
import logging

from hamcheck.core.constants import Direction
from hamcheck.utils import mask_of


class OrientationError(ValueError):
    """Vertex absent from the carrier, or the requested direction is infeasible"""


class SpliceError(ValueError):
    """Concatenated parts do not form a valid path or cycle"""


class Segment(object):
    """Contiguous traversal of a path or cycle from first to last"""

    __slots__ = ("verts",)

    def __init__(self, verts):
        self.verts = tuple(verts)
        if not self.verts:
            raise OrientationError("Empty segment")

    def __iter__(self):
        return iter(self.verts)

    def __len__(self):
        return len(self.verts)

    def __contains__(self, v):
        return v in self.verts

    def __eq__(self, other):
        return isinstance(other, Segment) and self.verts == other.verts

    def __hash__(self):
        return hash(self.verts)

    def __repr__(self):
        return f"Segment{self.verts}"

    @property
    def first(self):
        return self.verts[0]

    @property
    def last(self):
        return self.verts[-1]

    @property
    def vertex_set(self):
        return frozenset(self.verts)


class _Oriented(object):
    __slots__ = ("graph", "verts", "_position", "mask")

    kind = "walk"
    logger = logging.getLogger("hamcheck.core.oriented")

    def __init__(self, graph, verts):
        verts = tuple(verts)
        position = {}
        for i, v in enumerate(verts):
            if not 0 <= v < graph.n:
                raise SpliceError(f"Vertex {v} not in graph of order {graph.n}")
            if v in position:
                raise SpliceError(f"Vertex {v} repeated in {self.kind} {verts}")
            position[v] = i
        for a, b in zip(verts, verts[1:]):
            if not graph.has_edge(a, b):
                raise SpliceError(f"Non-adjacent junction {a}-{b} in {self.kind} {verts}")
        self.graph = graph
        self.verts = verts
        self._position = position
        self.mask = mask_of(verts)

    def __iter__(self):
        return iter(self.verts)

    def __len__(self):
        return len(self.verts)

    def __contains__(self, v):
        return v in self._position

    def __eq__(self, other):
        return type(self) is type(other) and self.verts == other.verts

    def __hash__(self):
        return hash((self.kind, self.verts))

    def __repr__(self):
        return f"{type(self).__name__}{self.verts}"

    @property
    def vertex_set(self):
        return frozenset(self.verts)

    def index(self, v):
        try:
            return self._position[v]
        except KeyError:
            raise OrientationError(f"Vertex {v} not on {self.kind} {self.verts}") from None

    def successors(self, vertices):
        """U+ restricted to the members of U that have a successor"""
        output = set()
        for v in vertices:
            nxt = self._next(v)
            if nxt is not None:
                output.add(nxt)
        return frozenset(output)

    def predecessors(self, vertices):
        """U- restricted to the members of U that have a predecessor"""
        output = set()
        for v in vertices:
            prv = self._prev(v)
            if prv is not None:
                output.add(prv)
        return frozenset(output)

    def neighbors_on(self, v):
        """N(v) restricted to the carrier"""
        return frozenset(u for u in self.graph.neighbors(v) if u in self._position)

    def successor(self, v):
        nxt = self._next(v)
        if nxt is None:
            raise OrientationError(f"Vertex {v} has no successor on {self.verts}")
        return nxt

    def predecessor(self, v):
        prv = self._prev(v)
        if prv is None:
            raise OrientationError(f"Vertex {v} has no predecessor on {self.verts}")
        return prv


class OrientedPath(_Oriented):
    """Path with a given orientation, first vertex to last vertex"""

    __slots__ = ()

    kind = "path"

    def __init__(self, graph, verts):
        super().__init__(graph, verts)
        if not self.verts:
            raise SpliceError("Empty path")

    @property
    def first(self):
        return self.verts[0]

    @property
    def last(self):
        return self.verts[-1]

    def _next(self, v):
        i = self.index(v)
        return self.verts[i + 1] if i + 1 < len(self.verts) else None

    def _prev(self, v):
        i = self.index(v)
        return self.verts[i - 1] if i > 0 else None

    def reversed(self):
        return OrientedPath(self.graph, reversed(self.verts))

    def segment(self, u, v, direction=Direction.FORWARD):
        i, j = self.index(u), self.index(v)
        if direction == Direction.FORWARD:
            if i > j:
                raise OrientationError(f"{v} does not follow {u} on path {self.verts}")
            return Segment(self.verts[i : j + 1])
        if i < j:
            raise OrientationError(f"{v} does not precede {u} on path {self.verts}")
        return Segment(self.verts[j : i + 1][::-1])

    def as_segment(self):
        return Segment(self.verts)


class OrientedCycle(_Oriented):
    """Cycle of order >= 3 with a given orientation; the last vertex is followed by the first"""

    __slots__ = ()

    kind = "cycle"

    def __init__(self, graph, verts):
        super().__init__(graph, verts)
        if len(self.verts) < 3:
            raise SpliceError(f"Cycle of length {len(self.verts)} < 3: {self.verts}")
        if not graph.has_edge(self.verts[-1], self.verts[0]):
            raise SpliceError(
                f"Non-adjacent closing junction {self.verts[-1]}-{self.verts[0]} in cycle {self.verts}"
            )

    def _next(self, v):
        return self.verts[(self.index(v) + 1) % len(self.verts)]

    def _prev(self, v):
        return self.verts[self.index(v) - 1]

    def reversed(self):
        return OrientedCycle(self.graph, reversed(self.verts))

    def rotated(self, start):
        i = self.index(start)
        return OrientedCycle(self.graph, self.verts[i:] + self.verts[:i])

    def segment(self, u, v, direction=Direction.FORWARD):
        """u->v (forward) or u<-v read from u backwards to v, wrapping around"""
        i, j = self.index(u), self.index(v)
        size = len(self.verts)
        step = 1 if direction == Direction.FORWARD else -1
        length = ((j - i) * step) % size + 1
        return Segment(self.verts[(i + step * k) % size] for k in range(length))


def successor(carrier, v):
    return carrier.successor(v)


def predecessor(carrier, v):
    return carrier.predecessor(v)


def segment(carrier, u, v, direction=Direction.FORWARD):
    return carrier.segment(u, v, Direction(direction))


def splice(graph, parts, cycle=False):
    """
    Concatenate Segments, sequences and single vertices into a validated
    OrientedPath, or an OrientedCycle when cycle is set. A cycle may repeat its
    first vertex as the closing vertex of the last part.
    """
    verts = []
    for part in parts:
        if isinstance(part, int):
            verts.append(part)
        else:
            chunk = list(part)
            if not chunk:
                raise SpliceError("Empty part")
            verts.extend(chunk)
    if cycle:
        if len(verts) > 1 and verts[-1] == verts[0]:
            verts.pop()
        return OrientedCycle(graph, verts)
    return OrientedPath(graph, verts)

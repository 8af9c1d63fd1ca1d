# -*- encoding: utf-8 -*-
"""
Cycle-extension moves. Each move names a vertex sequence and applies iff
splice accepts it; the result always has one more vertex than its input.
"""
import functools
import logging
from dataclasses import dataclass, field

from hamcheck.core.constants import Direction, MoveKind
from hamcheck.core.oriented import OrientationError, OrientedCycle, SpliceError, splice

logger = logging.getLogger("hamcheck.constructive.moves")


class MoveError(ValueError):
    """Move preconditions fail or its vertex sequence is not a cycle"""


def _move(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (OrientationError, SpliceError) as e:
            raise MoveError(f"{func.__name__}: {e}") from e

    return wrapper


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    anchors: dict = field(hash=False)
    result: OrientedCycle = field(compare=False, hash=False)

    def to_json(self):
        return {"kind": str(self.kind), "anchors": dict(self.anchors), "length": len(self.result)}


def _check_off_cycle(g, cycle, x):
    if cycle.graph is not g:
        OrientedCycle(g, cycle.verts)
    if not 0 <= x < g.n:
        raise MoveError(f"Vertex {x} not in {g}")
    if x in cycle:
        raise MoveError(f"Vertex {x} already on cycle {cycle.verts}")


def _build(g, cycle, parts, kind):
    try:
        output = splice(g, parts, cycle=True)
    except SpliceError as e:
        raise MoveError(f"{kind}: {e}") from e
    if len(output) != len(cycle) + 1:
        raise MoveError(f"{kind}: result {output.verts} is not one vertex longer than {cycle.verts}")
    return output


@_move
def move_absorb(g, cycle, x, v=None):
    """Insert x between consecutive cycle neighbours v and v+"""
    _check_off_cycle(g, cycle, x)
    candidates = [v] if v is not None else [
        u for u in cycle.verts if g.has_edge(x, u) and g.has_edge(x, cycle.successor(u))
    ]
    if not candidates:
        raise MoveError(f"{x} has no two consecutive neighbours on {cycle.verts}")
    v = candidates[0]
    v_plus = cycle.successor(v)
    return _build(g, cycle, [cycle.segment(v_plus, v, Direction.FORWARD), x], MoveKind.ABSORB)


def _crossing_pairs(g, cycle, x):
    """(y, z) with y-, z- in N(x), in cycle order"""
    plus = [cycle.successor(u) for u in cycle.verts if g.has_edge(x, u)]
    for i, y in enumerate(plus):
        for z in plus[i + 1 :]:
            yield y, z
            yield z, y


@_move
def move_crossing_case1(g, cycle, x, y=None, z=None):
    """y- x z- <-C y z ->C y-, for y, z in N+(x) with yz an edge"""
    _check_off_cycle(g, cycle, x)
    if y is None and z is None:
        for y, z in _crossing_pairs(g, cycle, x):
            if g.has_edge(y, z):
                break
        else:
            raise MoveError(f"No adjacent pair in N+({x}) on {cycle.verts}")
    if y == z:
        raise MoveError(f"Crossing move needs distinct successors, got y=z={y}")
    y_minus, z_minus = cycle.predecessor(y), cycle.predecessor(z)
    if not (g.has_edge(x, y_minus) and g.has_edge(x, z_minus)):
        raise MoveError(f"{y} and {z} are not both in N+({x})")
    if not g.has_edge(y, z):
        raise MoveError(f"{y}{z} is not an edge")
    return _build(
        g,
        cycle,
        [
            y_minus,
            x,
            cycle.segment(z_minus, y, Direction.REVERSE),
            cycle.segment(z, y_minus, Direction.FORWARD),
        ],
        MoveKind.CROSSING,
    )


@_move
def move_chord_pair(g, cycle, y, z, w, x=None):
    """
    y- x z- <-C w y ->C w- z ->C y-, with y-, z- in N(x) and w in A = V(y+ ->C z)
    adjacent to y while w- is adjacent to z
    """
    if y == z:
        raise MoveError(f"Chord-pair move needs distinct y and z, got {y}")
    y_minus, z_minus = cycle.predecessor(y), cycle.predecessor(z)
    if x is None:
        common = [
            u for u in range(g.n)
            if u not in cycle and g.has_edge(u, y_minus) and g.has_edge(u, z_minus)
        ]
        if not common:
            raise MoveError(f"No off-cycle vertex adjacent to both {y_minus} and {z_minus}")
        x = common[0]
    _check_off_cycle(g, cycle, x)
    if not (g.has_edge(x, y_minus) and g.has_edge(x, z_minus)):
        raise MoveError(f"{y} and {z} are not both in N+({x})")
    a_side = cycle.segment(cycle.successor(y), z, Direction.FORWARD)
    if w not in a_side:
        raise MoveError(f"{w} not in A = {a_side.verts}")
    w_minus = cycle.predecessor(w)
    return _build(
        g,
        cycle,
        [
            y_minus,
            x,
            cycle.segment(z_minus, w, Direction.REVERSE),
            cycle.segment(y, w_minus, Direction.FORWARD),
            cycle.segment(z, y_minus, Direction.FORWARD),
        ],
        MoveKind.CHORD_PAIR,
    )


@_move
def move_rotation_case22(g, cycle, x, y, w):
    """
    v1 ->C y- x w <-C y w+ ->C v1, where v1 is the first vertex of the cycle.
    Needs y- and w in N(x) and w+ in N(y); w = y- never splices.
    """
    _check_off_cycle(g, cycle, x)
    y_minus = cycle.predecessor(y)
    w_plus = cycle.successor(w)
    output = _build(
        g,
        cycle,
        [
            x,
            cycle.segment(w, y, Direction.REVERSE),
            cycle.segment(w_plus, y_minus, Direction.FORWARD),
        ],
        MoveKind.ROTATION,
    )
    return output.rotated(cycle.verts[0])


def _find_absorb(g, cycle, x):
    for v in cycle.verts:
        if g.has_edge(x, v) and g.has_edge(x, cycle.successor(v)):
            return Move(MoveKind.ABSORB, {"x": x, "v": v}, move_absorb(g, cycle, x, v))
    return None


def _find_crossing(g, cycle, x):
    for y, z in _crossing_pairs(g, cycle, x):
        if g.has_edge(y, z):
            return Move(
                MoveKind.CROSSING, {"x": x, "y": y, "z": z}, move_crossing_case1(g, cycle, x, y, z)
            )
    return None


def _find_chord_pair(g, cycle, x):
    for y, z in _crossing_pairs(g, cycle, x):
        a_side = cycle.segment(cycle.successor(y), z, Direction.FORWARD)
        for w in a_side:
            if w == z or not g.has_edge(w, y) or not g.has_edge(cycle.predecessor(w), z):
                continue
            try:
                result = move_chord_pair(g, cycle, y, z, w, x=x)
            except MoveError:
                continue
            return Move(MoveKind.CHORD_PAIR, {"x": x, "y": y, "z": z, "w": w}, result)
    return None


def _find_rotation(g, cycle, x):
    neighbours = [u for u in cycle.verts if g.has_edge(x, u)]
    for y_minus in neighbours:
        y = cycle.successor(y_minus)
        for w in neighbours:
            if w == y_minus or not g.has_edge(cycle.successor(w), y):
                continue
            try:
                result = move_rotation_case22(g, cycle, x, y, w)
            except MoveError:
                continue
            return Move(MoveKind.ROTATION, {"x": x, "y": y, "w": w}, result)
    return None


CATALOG = (
    (MoveKind.ABSORB, _find_absorb),
    (MoveKind.CROSSING, _find_crossing),
    (MoveKind.CHORD_PAIR, _find_chord_pair),
    (MoveKind.ROTATION, _find_rotation),
)


def find_move(g, cycle):
    """First applicable move: off-cycle vertices ascending, catalog order, then the reversed orientation"""
    for oriented in (cycle, cycle.reversed()):
        for x in range(g.n):
            if x in oriented:
                continue
            for kind, finder in CATALOG:
                move = finder(g, oriented, x)
                if move is not None:
                    logger.debug(f"{kind} applies at {move.anchors} on {cycle.verts}")
                    return move
    return None


def improve_cycle(g, cycle):
    """A strictly longer cycle from one catalog move, or None"""
    move = find_move(g, cycle)
    return move.result if move else None


def improve_to_fixpoint(g, cycle):
    """Apply moves until none applies; returns (final cycle, trace of moves)"""
    trace = []
    while True:
        move = find_move(g, cycle)
        if move is None:
            return cycle, trace
        cycle = move.result
        trace.append(move)

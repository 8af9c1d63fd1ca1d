import random

import pytest

from conftest import complete_graph, cycle_graph, path_graph
from hamcheck.checker.corpus import random_graphs
from hamcheck.core.constants import Direction
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


def test_path_successors_and_predecessors():
    path = OrientedPath(path_graph(5), [0, 1, 2, 3, 4])
    assert (path.first, path.last) == (0, 4)
    assert successor(path, 2) == 3
    assert predecessor(path, 2) == 1
    assert path.successors({0, 2, 4}) == {1, 3}
    assert path.predecessors({0, 2, 4}) == {1, 3}
    with pytest.raises(OrientationError):
        path.successor(4)
    with pytest.raises(OrientationError):
        path.index(9)


def test_path_segments():
    path = OrientedPath(path_graph(5), [0, 1, 2, 3, 4])
    assert segment(path, 1, 3).verts == (1, 2, 3)
    assert segment(path, 3, 1, Direction.REVERSE).verts == (3, 2, 1)
    assert path.reversed().verts == (4, 3, 2, 1, 0)
    with pytest.raises(OrientationError):
        path.segment(3, 1, Direction.FORWARD)


def test_cycle_wraps():
    cycle = OrientedCycle(cycle_graph(6), [0, 1, 2, 3, 4, 5])
    assert cycle.successor(5) == 0
    assert cycle.predecessor(0) == 5
    assert cycle.segment(4, 1).verts == (4, 5, 0, 1)
    assert cycle.segment(1, 4, Direction.REVERSE).verts == (1, 0, 5, 4)
    assert cycle.segment(2, 1).verts == (2, 3, 4, 5, 0, 1)
    assert cycle.rotated(3).verts == (3, 4, 5, 0, 1, 2)
    assert cycle.reversed().successor(0) == 5


def test_neighbors_on_carrier(petersen):
    path = OrientedPath(petersen, [0, 1, 2])
    assert path.neighbors_on(0) == {1}
    assert path.neighbors_on(6) == {1}


def test_splice_builds_cycle():
    g = complete_graph(5)
    cycle = OrientedCycle(g, [0, 1, 2, 3])
    spliced = splice(g, [cycle.segment(1, 0), 4], cycle=True)
    assert spliced.verts == (1, 2, 3, 0, 4)
    closed = splice(g, [Segment([0, 1, 2]), 0], cycle=True)
    assert closed.verts == (0, 1, 2)


@pytest.mark.parametrize(
    "parts, cycle, message",
    [
        ([[0, 1, 1]], False, "repeated"),
        ([[0, 2]], False, "Non-adjacent"),
        ([[0, 1]], True, "length 2"),
        ([[0, 1, 2, 3]], True, "closing"),
        ([[]], False, "Empty part"),
        ([[0, 9]], False, "not in graph"),
    ],
)
def test_splice_rejects(parts, cycle, message):
    with pytest.raises(SpliceError, match=message):
        splice(path_graph(4), parts, cycle=cycle)


def test_segment_membership():
    seg = Segment([3, 4, 5])
    assert (seg.first, seg.last, len(seg)) == (3, 5, 3)
    assert 4 in seg and 6 not in seg
    assert seg.vertex_set == {3, 4, 5}


def random_sequence(rng, g):
    """Mostly a walk in g, with the occasional arbitrary or out-of-range vertex"""
    verts = [rng.randrange(g.n)]
    for _ in range(rng.randint(0, g.n)):
        tip = verts[-1]
        if tip < g.n and g.neighbors(tip) and rng.random() < 0.8:
            verts.append(rng.choice(sorted(g.neighbors(tip))))
        else:
            verts.append(rng.randrange(g.n + 1))
    return verts


def random_parts(rng, verts):
    parts, i = [], 0
    while i < len(verts):
        chunk = verts[i : i + rng.randint(1, 3)]
        parts.append(chunk[0] if len(chunk) == 1 else Segment(chunk))
        i += len(chunk)
    return parts


def is_valid_sequence(g, verts, cycle):
    if len(set(verts)) != len(verts) or any(v >= g.n for v in verts):
        return False
    if not all(g.has_edge(a, b) for a, b in zip(verts, verts[1:])):
        return False
    return not cycle or (len(verts) >= 3 and g.has_edge(verts[-1], verts[0]))


def test_splice_accepts_exactly_the_valid_sequences():
    rng = random.Random(3)
    for g in random_graphs(200, range(4, 9), [0.3, 0.6], seed=9):
        for _ in range(20):
            verts = random_sequence(rng, g)
            cycle = rng.random() < 0.5
            closing = cycle and len(verts) > 1 and verts[-1] == verts[0]
            expected = verts[:-1] if closing else verts
            parts = random_parts(rng, verts)
            if is_valid_sequence(g, expected, cycle):
                assert list(splice(g, parts, cycle=cycle)) == expected
            else:
                with pytest.raises(SpliceError):
                    splice(g, parts, cycle=cycle)

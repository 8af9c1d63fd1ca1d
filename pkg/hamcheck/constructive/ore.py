# -*- encoding: utf-8 -*-
"""Ore-type closure of a longest path, and the certificate it yields for sigma_2 >= p"""
import logging

from hamcheck.core.constants import Direction
from hamcheck.core.oriented import OrientedPath, splice
from hamcheck.constructive.certificate import CycleOfOrderP, HamiltonCycle, Refutation
from hamcheck.invariants.longest import longest_path

logger = logging.getLogger("hamcheck.constructive.ore")


class PathClosureError(ValueError):
    """Path cannot be closed yet its end degrees are too large for a refutation"""


class SolverContradictionError(RuntimeError):
    """A closed longest path left vertices uncovered in a connected graph"""


class DisconnectedGraphError(ValueError):
    """Certification needs a connected graph"""


class GraphTooSmallError(ValueError):
    """Certification needs order >= 3"""


def ore_close(g, path):
    """
    Close x->y into a cycle on V(P): directly when xy is an edge, otherwise
    through z in N(x) and N+(y) as x z->y z- <-x. When neither applies the end
    pair is returned as a refutation of d(x) + d(y) >= |P|.
    """
    path = OrientedPath(g, path.verts)
    if len(path) < 3:
        raise PathClosureError(f"Path {path.verts} is too short to close into a cycle")
    x, y = path.first, path.last
    if g.has_edge(x, y):
        logger.debug(f"closing {path.verts} through end edge {x}-{y}")
        return CycleOfOrderP(splice(g, [path.as_segment()], cycle=True))

    successors = path.successors(path.neighbors_on(y))
    for z in path.verts:
        if z in successors and g.has_edge(x, z):
            z_minus = path.predecessor(z)
            cycle = splice(
                g,
                [
                    path.segment(z, y, Direction.FORWARD),
                    path.segment(z_minus, x, Direction.REVERSE),
                ],
                cycle=True,
            )
            logger.debug(f"closing {path.verts} through z={z}: {cycle.verts}")
            return CycleOfOrderP(cycle)

    degree_sum = g.degree(x) + g.degree(y)
    if degree_sum >= len(path):
        raise PathClosureError(
            f"No closure for {path.verts} but d({x})+d({y})={degree_sum} >= {len(path)}: "
            "the path is not a longest path"
        )
    return Refutation(frozenset((x, y)), degree_sum, len(path))


def certify_theorem1(g):
    """Hamilton cycle, or an independent pair with d(x) + d(y) < p"""
    if g.n < 3:
        raise GraphTooSmallError(f"Certification needs order >= 3, got {g.n}")
    if not g.is_connected():
        raise DisconnectedGraphError(f"{g} is disconnected")
    p, path = longest_path(g)
    result = ore_close(g, path)
    if isinstance(result, Refutation):
        return result.validate(g)
    if p != g.n:
        raise SolverContradictionError(
            f"Cycle {result.cycle.verts} of order p={p} < n={g.n} in a connected graph: "
            "a longer path exists, the longest path solver is wrong"
        )
    return HamiltonCycle(result.cycle).validate(g)

# -*- encoding: utf-8 -*-
import logging

from hamcheck.core.constants import DEFAULT_CYCLE_CAP
from hamcheck.core.oriented import OrientedCycle, SpliceError
from hamcheck.invariants.longest import longest_cycle
from hamcheck.utils import bits, popcount

logger = logging.getLogger("hamcheck.invariants.dominating")


class InvalidCycleError(ValueError):
    """Cycle does not belong to the graph"""


class CapExceededError(RuntimeError):
    """Cycle enumeration cap reached before the answer was settled"""


def _check_cycle(g, cycle):
    if cycle.graph is g:
        return
    try:
        OrientedCycle(g, cycle.verts)
    except SpliceError as e:
        raise InvalidCycleError(f"{cycle} is not a cycle of {g}: {e}") from e


def is_dominating_cycle(g, cycle):
    """True iff the vertices off the cycle form an independent set"""
    _check_cycle(g, cycle)
    return g.is_independent(g.all_mask & ~cycle.mask)


def _cycle_vertex_sets(g, order, cap):
    """Yield vertex-set masks of the cycles of exactly this order, each once"""
    seen = set()

    def extend(anchor, tip, allowed, visited, length):
        if length == order:
            if g.has_edge(tip, anchor) and visited not in seen:
                seen.add(visited)
                if len(seen) > cap:
                    raise CapExceededError(f"More than {cap} cycles of order {order} in {g}")
                yield visited
            return
        free = allowed & ~visited
        if length + popcount(g.reach(tip, free)) - 1 < order:
            return
        for w in bits(g.masks[tip] & free):
            yield from extend(anchor, w, allowed, visited | (1 << w), length + 1)

    for anchor in range(g.n):
        allowed = g.all_mask & ~((1 << (anchor + 1)) - 1)
        if popcount(allowed) + 1 < order:
            break
        yield from extend(anchor, anchor, allowed, 1 << anchor, 1)


def all_longest_cycles_dominating(g, cap=DEFAULT_CYCLE_CAP, c=None):
    """
    True iff every cycle of order c is dominating. Cycles are deduplicated by
    vertex set; a non-dominating one settles the answer immediately.
    """
    if c is None:
        c, _ = longest_cycle(g)
    if c < 3:
        raise ValueError(f"No cycle of order >= 3 in {g}")
    for vertex_mask in _cycle_vertex_sets(g, c, cap):
        if not g.is_independent(g.all_mask & ~vertex_mask):
            logger.debug(f"longest cycle on {sorted(bits(vertex_mask))} is not dominating")
            return False
    return True

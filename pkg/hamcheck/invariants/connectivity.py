# -*- encoding: utf-8 -*-
import logging
from collections import defaultdict, deque
from itertools import combinations

from hamcheck.core.constants import DEFAULT_ORACLE_BOUND
from hamcheck.utils import mask_of

logger = logging.getLogger("hamcheck.invariants.connectivity")


class OracleBoundError(ValueError):
    """Graph too large for an exhaustive oracle"""


def check_oracle_bound(g, oracle_bound):
    if g.n > oracle_bound:
        raise OracleBoundError(f"Order {g.n} exceeds oracle bound {oracle_bound}")


def local_vertex_connectivity(g, s, t, cutoff=None):
    """
    Maximum number of internally disjoint s-t paths for non-adjacent s, t.
    Unit-capacity max-flow on the split graph: v_in = 2v, v_out = 2v + 1.
    """
    if g.has_edge(s, t):
        raise ValueError(f"Local connectivity undefined for adjacent pair {s}-{t}")
    residual = defaultdict(int)
    arcs = defaultdict(set)

    def add_arc(a, b):
        residual[(a, b)] += 1
        arcs[a].add(b)
        arcs[b].add(a)

    for v in range(g.n):
        if v not in (s, t):
            add_arc(2 * v, 2 * v + 1)
    for u, v in g.edges():
        add_arc(2 * u + 1, 2 * v)
        add_arc(2 * v + 1, 2 * u)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while cutoff is None or flow < cutoff:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(arcs[a]):
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return flow


def connectivity(g):
    """
    Vertex connectivity: 0 for disconnected graphs and K_1, n - 1 for K_n,
    otherwise the minimum local connectivity over the non-adjacent pairs that
    must be examined around a minimum-degree vertex.
    """
    if g.n <= 1 or not g.is_connected():
        return 0
    if g.is_complete:
        return g.n - 1
    degrees = [g.degree(v) for v in range(g.n)]
    v = degrees.index(min(degrees))
    best = degrees[v]
    for w in range(g.n):
        if w != v and not g.has_edge(v, w):
            best = min(best, local_vertex_connectivity(g, v, w, cutoff=best))
    for x, y in combinations(sorted(g.neighbors(v)), 2):
        if not g.has_edge(x, y):
            best = min(best, local_vertex_connectivity(g, x, y, cutoff=best))
    logger.debug(f"connectivity of {g} is {best}")
    return best


def min_vertex_cut_bruteforce(g, oracle_bound=DEFAULT_ORACLE_BOUND):
    """Exhaustive oracle for connectivity: smallest disconnecting subset by size"""
    check_oracle_bound(g, oracle_bound)
    if g.n <= 1 or not g.is_connected():
        return 0
    for size in range(0, g.n - 1):
        for removed in combinations(range(g.n), size):
            if not g.is_connected(g.all_mask & ~mask_of(removed)):
                return size
    return g.n - 1

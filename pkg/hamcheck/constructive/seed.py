# -*- encoding: utf-8 -*-
"""Starting cycle for the move catalog"""
import logging
from collections import deque

from hamcheck.core.oriented import OrientedCycle

logger = logging.getLogger("hamcheck.constructive.seed")


def _shortest_cycle_through(g, root):
    """
    BFS from root labelling every vertex with the root-neighbour it descends
    from; the cheapest edge joining two branches closes the shortest cycle
    through root.
    """
    parent = {root: None}
    depth = {root: 0}
    branch = {}
    queue = deque()
    for u in g.neighbors(root):
        parent[u] = root
        depth[u] = 1
        branch[u] = u
        queue.append(u)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in depth:
                parent[w] = u
                depth[w] = depth[u] + 1
                branch[w] = branch[u]
                queue.append(w)

    best = None
    for u, w in g.edges():
        if root in (u, w) or branch.get(u) is None or branch.get(w) is None:
            continue
        if branch[u] == branch[w]:
            continue
        length = depth[u] + depth[w] + 1
        if best is None or length < best[0]:
            best = (length, u, w)
    if best is None:
        return None

    _, u, w = best
    down = []
    while u is not None:
        down.append(u)
        u = parent[u]
    up = []
    while w != root:
        up.append(w)
        w = parent[w]
    return OrientedCycle(g, down[::-1] + up)


def seed_cycle(g):
    """Shortest cycle through the smallest vertex lying on any cycle, or None for a forest"""
    for root in range(g.n):
        if g.degree(root) < 2:
            continue
        cycle = _shortest_cycle_through(g, root)
        if cycle is not None:
            logger.debug(f"seed cycle of {g}: {cycle.verts}")
            return cycle
    return None

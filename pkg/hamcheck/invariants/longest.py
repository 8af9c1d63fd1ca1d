# -*- encoding: utf-8 -*-
"""Exact longest path and longest cycle by depth-first branch and bound on bitmasks"""
import logging

import networkx as nx

from hamcheck.core.constants import DEFAULT_ORACLE_BOUND
from hamcheck.core.oriented import OrientedCycle, OrientedPath
from hamcheck.invariants.connectivity import check_oracle_bound
from hamcheck.utils import bits, mask_of, popcount


class EmptyGraphError(ValueError):
    """Operation needs at least one vertex"""


def cycle_convention(g):
    """Order assigned to c when g has no cycle of order >= 3"""
    return 2 if g.m >= 1 else 1


class LongestPathSearch(object):
    """Depth-first extension of a path from every start, pruned by reachability from the tip"""

    logger = logging.getLogger("hamcheck.invariants.longest.path")

    def __init__(self, g):
        if g.n == 0:
            raise EmptyGraphError("Longest path of the empty graph")
        self.g = g
        self.best = []
        self._path = []
        self.nodes = 0

    def _reach_count(self, tip, visited):
        return popcount(self.g.reach(tip, self.g.all_mask & ~visited)) - 1

    def _extend(self, tip, visited, target):
        self.nodes += 1
        if len(self._path) > len(self.best):
            self.best = list(self._path)
        if len(self.best) >= target:
            return
        if len(self._path) + self._reach_count(tip, visited) <= len(self.best):
            return
        for w in bits(self.g.masks[tip] & ~visited):
            self._path.append(w)
            self._extend(w, visited | (1 << w), target)
            self._path.pop()
            if len(self.best) >= target:
                return

    def run(self):
        components = sorted(self.g.components(), key=lambda c: -popcount(c))
        for component in components:
            size = popcount(component)
            if size <= len(self.best):
                break
            for start in bits(component):
                self._path = [start]
                self._extend(start, 1 << start, size)
                if len(self.best) >= size:
                    break
        self.logger.debug(f"longest path of {self.g}: {len(self.best)} after {self.nodes} nodes")
        return len(self.best), OrientedPath(self.g, self.best)


class LongestCycleSearch(object):
    """
    Cycles are searched block by block; within a block each cycle is found
    from its minimum vertex, extended only through larger vertices.
    """

    logger = logging.getLogger("hamcheck.invariants.longest.cycle")

    def __init__(self, g):
        if g.n == 0:
            raise EmptyGraphError("Longest cycle of the empty graph")
        self.g = g
        self.best = []
        self._path = []
        self.nodes = 0

    def blocks(self):
        """Biconnected components with at least 3 vertices, largest first, as masks"""
        if self.g.m == 0:
            return []
        blocks = [
            mask_of(block)
            for block in nx.biconnected_components(self.g.to_networkx())
            if len(block) >= 3
        ]
        return sorted(blocks, key=lambda b: (-popcount(b), b))

    def _extend(self, anchor, tip, allowed, visited, target):
        self.nodes += 1
        g = self.g
        if len(self._path) >= 3 and g.has_edge(tip, anchor) and len(self._path) > len(self.best):
            self.best = list(self._path)
            if len(self.best) >= target:
                return
        free = allowed & ~visited
        if len(self._path) + popcount(g.reach(tip, free)) - 1 <= len(self.best):
            return
        for w in bits(g.masks[tip] & free):
            self._path.append(w)
            self._extend(anchor, w, allowed, visited | (1 << w), target)
            self._path.pop()
            if len(self.best) >= target:
                return

    def run(self):
        for block in self.blocks():
            size = popcount(block)
            if size <= len(self.best):
                break
            for anchor in bits(block):
                allowed = block & ~((1 << (anchor + 1)) - 1)
                if popcount(allowed) + 1 <= len(self.best):
                    break
                self._path = [anchor]
                self._extend(anchor, anchor, allowed, 1 << anchor, size)
                if len(self.best) >= size:
                    break
        self.logger.debug(f"longest cycle of {self.g}: {len(self.best)} after {self.nodes} nodes")
        if not self.best:
            return cycle_convention(self.g), None
        return len(self.best), OrientedCycle(self.g, self.best)


def longest_path(g):
    """(p, witness) with p the order of a longest path"""
    return LongestPathSearch(g).run()


def longest_cycle(g):
    """(c, witness); c = 2 or 1 by convention when there is no cycle, witness then None"""
    return LongestCycleSearch(g).run()


def longest_path_bruteforce(g, oracle_bound=DEFAULT_ORACLE_BOUND):
    """Unpruned exhaustive DFS over every simple path"""
    check_oracle_bound(g, oracle_bound)
    if g.n == 0:
        raise EmptyGraphError("Longest path of the empty graph")
    best = 0

    def walk(tip, visited, length):
        nonlocal best
        best = max(best, length)
        for w in bits(g.masks[tip] & ~visited):
            walk(w, visited | (1 << w), length + 1)

    for start in range(g.n):
        walk(start, 1 << start, 1)
    return best


def longest_cycle_bruteforce(g, oracle_bound=DEFAULT_ORACLE_BOUND):
    """Unpruned exhaustive DFS over every simple cycle, same conventions as longest_cycle"""
    check_oracle_bound(g, oracle_bound)
    if g.n == 0:
        raise EmptyGraphError("Longest cycle of the empty graph")
    best = 0

    def walk(start, tip, visited, length):
        nonlocal best
        if length >= 3 and g.has_edge(tip, start):
            best = max(best, length)
        for w in bits(g.masks[tip] & ~visited):
            if w > start:
                walk(start, w, visited | (1 << w), length + 1)

    for start in range(g.n):
        walk(start, start, 1 << start, 1)
    return best if best >= 3 else cycle_convention(g)

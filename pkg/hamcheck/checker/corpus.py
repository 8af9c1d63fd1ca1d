# -*- encoding: utf-8 -*-
"""Graph streams for sweeps: labeled enumeration, seeded random graphs and graph6 files"""
import logging
from dataclasses import dataclass

import networkx as nx

from hamcheck.core.constants import ENUMERATION_CEILING
from hamcheck.core.graph import Graph
from hamcheck.core.graph6 import read_graph6_file
from hamcheck.invariants.connectivity import connectivity

logger = logging.getLogger("hamcheck.checker.corpus")


class EnumerationCeilingError(ValueError):
    """Labeled enumeration requested above the supported order"""


@dataclass(frozen=True)
class GraphFilter:
    """connected, k-connected (kappa >= k) or no filter; picklable for worker pools"""

    name: str = "none"
    k: int = 0

    def __call__(self, g):
        if self.name == "none":
            return True
        if self.name == "connected":
            return g.is_connected()
        return connectivity(g) >= self.k

    def __str__(self):
        if self.name == "k-connected":
            return f"k-connected={self.k}"
        return self.name


NO_FILTER = GraphFilter()


def parse_filter(text):
    """connected | 2-connected | k-connected=K | none"""
    text = (text or "none").strip()
    if text in ("none", "connected"):
        return GraphFilter(text)
    if text == "2-connected":
        return GraphFilter("k-connected", 2)
    if text.startswith("k-connected="):
        value = text.partition("=")[2]
        if value.isdigit():
            return GraphFilter("k-connected", int(value))
    raise ValueError(f"Unknown filter {text!r}, expected connected, 2-connected or k-connected=K")


def pair_order(n):
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled(n, graph_filter=None):
    """
    Every labeled graph on n vertices, ordered by edge mask where bit i
    stands for the i-th pair of pair_order(n).
    """
    if n < 0:
        raise ValueError(f"Order must be >= 0, got {n}")
    if n > ENUMERATION_CEILING:
        raise EnumerationCeilingError(
            f"Labeled enumeration stops at n={ENUMERATION_CEILING}, got n={n}"
        )
    graph_filter = graph_filter or NO_FILTER
    pairs = pair_order(n)
    for edge_mask in range(1 << len(pairs)):
        masks = [0] * n
        bit = 0
        remaining = edge_mask
        while remaining:
            if remaining & 1:
                i, j = pairs[bit]
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            remaining >>= 1
            bit += 1
        g = Graph.from_masks(masks)
        if graph_filter(g):
            yield g


def enumerate_orders(low, high, graph_filter=None):
    for n in range(low, high + 1):
        logger.info(f"Enumerating labeled graphs of order {n}")
        yield from enumerate_labeled(n, graph_filter)


def random_graphs(count, orders, probabilities, seed=0, graph_filter=None):
    """
    count G(n, q) samples cycling through orders, then probabilities; sample
    i uses seed + i, so the stream is reproducible. Filtered samples are dropped.
    """
    orders, probabilities = list(orders), list(probabilities)
    if not orders or not probabilities:
        raise ValueError("random_graphs needs at least one order and one edge probability")
    graph_filter = graph_filter or NO_FILTER
    for i in range(count):
        n = orders[i % len(orders)]
        q = probabilities[(i // len(orders)) % len(probabilities)]
        g = Graph.from_networkx(nx.gnp_random_graph(n, q, seed=seed + i))
        if graph_filter(g):
            yield g
        else:
            logger.debug(f"random sample {i} (n={n}, q={q}) dropped by filter {graph_filter}")


def read_corpus(paths, graph_filter=None):
    graph_filter = graph_filter or NO_FILTER
    for path in paths:
        for _, _, g in read_graph6_file(path):
            if graph_filter(g):
                yield g

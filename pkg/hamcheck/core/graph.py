# -*- encoding: utf-8 -*-
import logging
from itertools import combinations

import networkx as nx

from hamcheck.utils import bits, lowest_bit, mask_of, popcount


class GraphError(ValueError):
    """Adjacency does not describe a simple undirected graph"""


class Graph(object):
    """
    Immutable simple undirected graph over vertices 0..n-1.
    Adjacency is kept both as vertex sets (adj) and as bitmasks (masks),
    the bitmask view feeds every search kernel.
    """

    __slots__ = ("n", "adj", "masks", "m", "_hash")

    logger = logging.getLogger("hamcheck.core.graph")

    def __init__(self, n, adj):
        if n < 0:
            raise GraphError(f"Negative order {n}")
        if len(adj) != n:
            raise GraphError(f"Expected {n} neighbourhoods, got {len(adj)}")
        adj = tuple(frozenset(a) for a in adj)
        degree_sum = 0
        for v, neighbours in enumerate(adj):
            if v in neighbours:
                raise GraphError(f"Loop at vertex {v}")
            for u in neighbours:
                if not 0 <= u < n:
                    raise GraphError(f"Neighbour {u} of {v} out of range 0..{n - 1}")
                if v not in adj[u]:
                    raise GraphError(f"Asymmetric adjacency {v}->{u}")
            degree_sum += len(neighbours)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "masks", tuple(mask_of(a) for a in adj))
        object.__setattr__(self, "m", degree_sum // 2)
        object.__setattr__(self, "_hash", hash((n, self.masks)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    @classmethod
    def from_edges(cls, n, edges):
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge {u}-{v} out of range 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @classmethod
    def from_masks(cls, masks):
        return cls(len(masks), [frozenset(bits(mask)) for mask in masks])

    @classmethod
    def from_networkx(cls, nx_graph):
        """Relabel nodes positionally in sorted order"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
        )

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def __eq__(self, other):
        return isinstance(other, Graph) and self.masks == other.masks

    def __hash__(self):
        return self._hash

    def __str__(self):
        return f"Graph n={self.n} m={self.m}"

    def __repr__(self):
        return f"Graph.from_edges({self.n}, {list(self.edges())})"

    @property
    def all_mask(self):
        return (1 << self.n) - 1

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return (self.masks[u] >> v) & 1 == 1

    def edges(self):
        """Edges (u, v) with u < v, in graph6 column order"""
        for v in range(self.n):
            for u in range(v):
                if self.has_edge(u, v):
                    yield (u, v)

    @property
    def min_degree(self):
        if self.n == 0:
            return 0
        return min(len(a) for a in self.adj)

    @property
    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    def with_edge(self, u, v):
        """Return a new graph with uv added"""
        return Graph.from_edges(self.n, list(self.edges()) + [(u, v)])

    def reach(self, start, allowed):
        """Mask of vertices reachable from start through vertices of allowed"""
        seen = 1 << start
        frontier = seen
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= self.masks[v]
            frontier = grown & allowed & ~seen
            seen |= frontier
        return seen

    def components(self, allowed=None):
        """Connected components of the subgraph induced by allowed, as masks"""
        remaining = self.all_mask if allowed is None else allowed
        output = []
        while remaining:
            component = self.reach(lowest_bit(remaining), remaining)
            output.append(component)
            remaining &= ~component
        return output

    def is_connected(self, allowed=None):
        remaining = self.all_mask if allowed is None else allowed
        if remaining == 0:
            return True
        return self.reach(lowest_bit(remaining), remaining) == remaining

    def is_independent(self, vertices):
        """True iff no edge inside vertices (vertex set or mask)"""
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        if mask & ~self.all_mask:
            raise GraphError(f"Vertex set {sorted(bits(mask))} not within 0..{self.n - 1}")
        for v in bits(mask):
            if self.masks[v] & mask:
                return False
        return True

    def degree_sum(self, vertices):
        return sum(popcount(self.masks[v]) for v in vertices)

    def non_edges(self):
        for u, v in combinations(range(self.n), 2):
            if not self.has_edge(u, v):
                yield (u, v)


def is_independent(g, vertices):
    return g.is_independent(vertices)

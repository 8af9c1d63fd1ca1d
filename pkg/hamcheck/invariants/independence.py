# -*- encoding: utf-8 -*-
import logging
from itertools import combinations

from hamcheck.core.constants import DEFAULT_ORACLE_BOUND
from hamcheck.invariants.connectivity import check_oracle_bound
from hamcheck.invariants.extnat import INFINITY, ExtNat
from hamcheck.utils import bits, lowest_bit, mask_of, popcount

logger = logging.getLogger("hamcheck.invariants.independence")


def _clique_cover_bound(g, candidates):
    """Greedy clique cover size of candidates: an upper bound on alpha there"""
    cliques = 0
    remaining = candidates
    while remaining:
        v = lowest_bit(remaining)
        clique = 1 << v
        common = g.masks[v] & remaining
        while common:
            u = lowest_bit(common)
            clique |= 1 << u
            common &= g.masks[u]
        remaining &= ~clique
        cliques += 1
    return cliques


def _greedy_independent(g, candidates):
    chosen = 0
    while candidates:
        v = min(bits(candidates), key=lambda u: popcount(g.masks[u] & candidates))
        chosen |= 1 << v
        candidates &= ~(g.masks[v] | (1 << v))
    return chosen


def maximum_independent_set(g):
    """Branch and bound; greedy lower bound, clique-cover upper bound"""
    best = [_greedy_independent(g, g.all_mask)]

    def search(chosen, candidates):
        if popcount(chosen) + popcount(candidates) <= popcount(best[0]):
            return
        if not candidates:
            best[0] = chosen
            return
        if popcount(chosen) + _clique_cover_bound(g, candidates) <= popcount(best[0]):
            return
        # A vertex of degree <= 1 within candidates belongs to some maximum set
        for v in bits(candidates):
            if popcount(g.masks[v] & candidates) <= 1:
                search(chosen | (1 << v), candidates & ~(g.masks[v] | (1 << v)))
                return
        v = max(bits(candidates), key=lambda u: popcount(g.masks[u] & candidates))
        search(chosen | (1 << v), candidates & ~(g.masks[v] | (1 << v)))
        search(chosen, candidates & ~(1 << v))

    search(0, g.all_mask)
    return frozenset(bits(best[0]))


def independence_number(g):
    return len(maximum_independent_set(g))


def sigma_k(g, k):
    """
    Minimum degree sum over independent k-sets, INFINITY when alpha < k.
    Vertices are tried in ascending degree order and a branch is cut as soon
    as its cheapest completion cannot beat the best sum found so far.
    """
    if k < 1:
        raise ValueError(f"sigma_k needs k >= 1, got {k}")
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    degree = [g.degree(v) for v in order]
    best = [None]

    def search(start, size, total, chosen_mask):
        if size == k:
            if best[0] is None or total < best[0]:
                best[0] = total
            return
        needed = k - size
        for i in range(start, len(order) - needed + 1):
            # degrees ascend, so the next `needed` entries are the cheapest completion
            if best[0] is not None and total + sum(degree[i : i + needed]) >= best[0]:
                return
            v = order[i]
            if chosen_mask & (g.masks[v] | (1 << v)):
                continue
            search(i + 1, size + 1, total + degree[i], chosen_mask | (1 << v))

    search(0, 0, 0, 0)
    if best[0] is None:
        return INFINITY
    return ExtNat(best[0])


def independence_number_bruteforce(g, oracle_bound=DEFAULT_ORACLE_BOUND):
    check_oracle_bound(g, oracle_bound)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if g.is_independent(mask_of(subset)):
                return size
    return 0


def sigma_k_bruteforce(g, k, oracle_bound=DEFAULT_ORACLE_BOUND):
    check_oracle_bound(g, oracle_bound)
    if k < 1:
        raise ValueError(f"sigma_k needs k >= 1, got {k}")
    sums = [
        g.degree_sum(subset)
        for subset in combinations(range(g.n), k)
        if g.is_independent(mask_of(subset))
    ]
    return ExtNat(min(sums)) if sums else INFINITY

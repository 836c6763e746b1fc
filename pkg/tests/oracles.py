"""Brute-force reference implementations shared by the tests.

Nothing here uses the package's search, canonical-form or cycle code.
"""

from __future__ import annotations

import itertools

import numpy as np


def pairs(n):
    return list(itertools.combinations(range(n), 2))


def labeled_edge_sets(n):
    """Every labelled simple graph on n vertices, as a list of edge tuples."""
    ps = pairs(n)
    for mask in range(1 << len(ps)):
        yield [p for i, p in enumerate(ps) if mask >> i & 1]


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def has_cycle_bruteforce(n, edges, m):
    """Some m-subset carries a Hamiltonian cycle, found by trying all orders."""
    adj = adjacency_sets(n, edges)
    for subset in itertools.combinations(range(n), m):
        if any(len(adj[v] & set(subset)) < 2 for v in subset):
            continue
        first, rest = subset[0], subset[1:]
        for perm in itertools.permutations(rest):
            if perm[0] > perm[-1]:
                continue
            cyc = (first,) + perm
            if all(cyc[i + 1] in adj[cyc[i]] for i in range(m - 1)) and cyc[0] in adj[cyc[-1]]:
                return True
    return False


def naive_canonical_codes(n):
    """Minimum edge bit-code over all n! relabellings, for every labelled graph.

    Returns an array indexed by the labelled code (bit i <-> pairs(n)[i]).
    """
    ps = pairs(n)
    index = {p: i for i, p in enumerate(ps)}
    codes = np.arange(1 << len(ps), dtype=np.int64)
    best = codes.copy()
    for perm in itertools.permutations(range(n)):
        image = np.zeros_like(codes)
        for i, (u, v) in enumerate(ps):
            a, b = sorted((perm[u], perm[v]))
            image |= ((codes >> i) & 1) << index[(a, b)]
        np.minimum(best, image, out=best)
    return best


def isomorphic_bruteforce(n, edges_a, edges_b):
    ea = {frozenset(e) for e in edges_a}
    eb = {frozenset(e) for e in edges_b}
    if len(ea) != len(eb):
        return False
    for perm in itertools.permutations(range(n)):
        if all(frozenset((perm[u], perm[v])) in eb for u, v in map(tuple, ea)):
            return True
    return False

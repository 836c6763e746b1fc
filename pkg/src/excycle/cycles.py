"""Exact cycle-length queries by depth-first path extension."""

from __future__ import annotations

from .graph import Graph, is_bipartite, iter_bits


def _reach(adj: tuple[int, ...], start: int, allowed: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def _greedy_independent(adj: tuple[int, ...], allowed: int) -> int:
    """Size of a greedy (minimum-degree first) independent set inside ``allowed``."""
    left = allowed
    size = 0
    while left:
        best, best_deg = -1, 1 << 30
        for v in iter_bits(left):
            d = (adj[v] & left).bit_count()
            if d < best_deg:
                best, best_deg = v, d
                if d == 0:
                    break
        left &= ~(adj[best] | (1 << best))
        size += 1
    return size


def _cycle_through_min(adj: tuple[int, ...], s: int, m: int, allowed: int) -> bool:
    """Is there a cycle of length ``m`` whose least vertex is ``s``, inside ``allowed``?"""
    close = adj[s] & allowed

    def extend(cur: int, avail: int, remaining: int, last: int) -> bool:
        # `remaining` more vertices must follow `cur`; the final one lies in `last`
        if remaining == 1:
            return bool(adj[cur] & avail & last)
        if remaining >= 3:
            r = _reach(adj, cur, avail | (1 << cur)) & avail
            size = r.bit_count()
            if size < remaining or not r & last:
                return False
            # the path's vertices in an independent set are pairwise non-consecutive
            if remaining >= 5 and 2 * (size - _greedy_independent(adj, r)) + 1 < remaining:
                return False
        for nxt in iter_bits(adj[cur] & avail):
            if extend(nxt, avail & ~(1 << nxt), remaining - 1, last):
                return True
        return False

    # orient the cycle: the second vertex is smaller than the last one
    for first in iter_bits(close):
        last = close & ~((2 << first) - 1)
        if not last:
            break
        if extend(first, allowed & ~(1 << first), m - 2, last):
            return True
    return False


def has_cycle_of_length(g: Graph, m: int) -> bool:
    if m < 3:
        raise ValueError(f"cycle length must be at least 3, got {m}")
    n = g.n
    if m > n or g.edge_count() < m:
        return False
    if m % 2 and is_bipartite(g):
        return False
    adj = g.adj
    full = g.vertex_mask
    for s in range(n - m + 1):
        allowed = full & ~((1 << (s + 1)) - 1)
        if (adj[s] & allowed).bit_count() < 2:
            continue
        if _cycle_through_min(adj, s, m, allowed):
            return True
    return False


def cycle_spectrum(g: Graph) -> set[int]:
    return {m for m in range(3, g.n + 1) if has_cycle_of_length(g, m)}


def circumference(g: Graph) -> int:
    for m in range(g.n, 2, -1):
        if has_cycle_of_length(g, m):
            return m
    return 0


def girth(g: Graph) -> int:
    for m in range(3, g.n + 1):
        if has_cycle_of_length(g, m):
            return m
    return 0


def is_pancyclic_from_3(g: Graph) -> bool:
    spectrum = cycle_spectrum(g)
    return spectrum == set(range(3, max(spectrum, default=2) + 1))


def has_path_of_length(g: Graph, u: int, v: int, length: int) -> bool:
    """Is there a simple ``u``-``v`` path with exactly ``length`` edges?"""
    if u == v or length < 1:
        return False
    adj = g.adj
    target = 1 << v

    def extend(cur: int, avail: int, remaining: int) -> bool:
        if remaining == 1:
            return bool(adj[cur] & target)
        for nxt in iter_bits(adj[cur] & avail):
            if extend(nxt, avail & ~(1 << nxt), remaining - 1):
                return True
        return False

    return extend(u, g.vertex_mask & ~(1 << u) & ~target, length)


def path_endpoint_masks(adj: tuple[int, ...], length: int) -> list[int]:
    """``out[a]`` has bit ``b`` set iff a simple path of ``length`` edges joins a and b."""
    n = len(adj)
    full = (1 << n) - 1
    out = [0] * n
    if length < 1:
        return out

    def walk(cur: int, avail: int, remaining: int, acc: int) -> int:
        if remaining == 1:
            return acc | (adj[cur] & avail)
        for nxt in iter_bits(adj[cur] & avail):
            acc = walk(nxt, avail & ~(1 << nxt), remaining - 1, acc)
        return acc

    for a in range(n):
        out[a] = walk(a, full & ~(1 << a), length, 0)
    return out

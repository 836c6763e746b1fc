"""Canonical labelling of small graphs.

The canonical form of a graph is its lexicographically least upper-triangle
adjacency string, minimised over the leaves of an individualisation /
refinement search tree.  Equitable refinement by neighbour counts keeps the
tree small; automorphisms discovered when two leaves give the same string
prune the rest (orbit pruning plus a back-jump to the level where the two
leaves diverge).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, GraphError, from_edges, iter_bits

CANON_LIMIT = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    code: int
    edges: tuple[tuple[int, int], ...] = field(compare=False, repr=False)

    def graph(self) -> Graph:
        return from_edges(self.n, self.edges)


def _refine(adj: tuple[int, ...], cells: list[int], queue: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (list of vertex masks)."""
    n = len(adj)
    qi = 0
    while qi < len(queue) and len(cells) < n:
        w = queue[qi]
        qi += 1
        out = []
        for c in cells:
            if not c & (c - 1):
                out.append(c)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(c):
                k = (adj[v] & w).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(c)
                continue
            frags = [groups[k] for k in sorted(groups)]
            out.extend(frags)
            queue.extend(frags)
        cells = out
    return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    # position i is stored at bit n-1-i so that later positions are less significant
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = 1 << (n - 1 - i)
    code = 0
    for i, v in enumerate(order):
        width = n - 1 - i
        if not width:
            break
        row = 0
        for u in iter_bits(adj[v]):
            row |= rank[u]
        code = (code << width) | (row & ((1 << width) - 1))
    return code


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.n = len(adj)
        self.best_code = -1
        self.best_order: list[int] = []
        self.best_path: list[int] = []
        self.first_code = -1
        self.first_order: list[int] = []
        self.first_path: list[int] = []
        self.generators: list[tuple[int, ...]] = []
        self.leaves = 0

    def run(self) -> None:
        full = (1 << self.n) - 1
        cells = _refine(self.adj, [full], [full])
        self._explore(cells, [])

    def _orbit_roots(self, path: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if any(gamma[p] != p for p in path):
                continue
            for v in range(self.n):
                a, b = find(v), find(gamma[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def _leaf(self, cells: list[int], path: list[int]) -> int:
        """Handle a discrete partition; returns the depth to back-jump to (or -1)."""
        self.leaves += 1
        order = [c.bit_length() - 1 for c in cells]
        code = _leaf_code(self.adj, order)
        if self.best_code < 0:
            self.best_code = self.first_code = code
            self.best_order = self.first_order = order
            self.best_path = self.first_path = list(path)
            return -1
        for ref_code, ref_order, ref_path in (
            (self.first_code, self.first_order, self.first_path),
            (self.best_code, self.best_order, self.best_path),
        ):
            if code == ref_code:
                gamma = [0] * self.n
                for a, b in zip(ref_order, order):
                    gamma[a] = b
                self.generators.append(tuple(gamma))
                depth = 0
                while depth < len(path) and path[depth] == ref_path[depth]:
                    depth += 1
                return depth
        if code < self.best_code:
            self.best_code = code
            self.best_order = order
            self.best_path = list(path)
        return -1

    def _explore(self, cells: list[int], path: list[int]) -> int:
        if len(cells) == self.n:
            return self._leaf(cells, path)
        t = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[t]
        depth = len(path)
        tried: list[int] = []
        for v in iter_bits(target):
            if tried:
                roots = self._orbit_roots(path)
                if any(roots[v] == roots[u] for u in tried):
                    continue
            tried.append(v)
            bit = 1 << v
            child = cells[:t] + [bit, target & ~bit] + cells[t + 1:]
            child = _refine(self.adj, child, [bit])
            path.append(v)
            jump = self._explore(child, path)
            path.pop()
            if jump >= 0 and jump < depth:
                return jump
        return -1


@lru_cache(maxsize=1 << 16)
def _canonical(adj: tuple[int, ...]) -> tuple[int, tuple[int, ...], int]:
    search = _Search(adj)
    search.run()
    return search.best_code, tuple(search.best_order), search.leaves


def canonical_labeling(g: Graph, limit: int = CANON_LIMIT) -> tuple[int, ...]:
    """Vertex order (position -> original vertex) that realises the canonical form."""
    _check_limit(g, limit)
    return _canonical(g.adj)[1]


def canonical_form(g: Graph, limit: int = CANON_LIMIT) -> CanonicalForm:
    _check_limit(g, limit)
    code, order, _ = _canonical(g.adj)
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges())
    return CanonicalForm(g.n, code, tuple(edges))


def is_isomorphic(g: Graph, h: Graph, limit: int = CANON_LIMIT) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        _check_limit(g, limit)
        _check_limit(h, limit)
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        _check_limit(g, limit)
        _check_limit(h, limit)
        return False
    return canonical_form(g, limit) == canonical_form(h, limit)


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise GraphError(f"canonical form limited to {limit} vertices, graph has {g.n}")

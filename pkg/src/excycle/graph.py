"""Immutable small graphs stored as per-vertex neighbour bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    Instances are never mutated; :meth:`add_edge` returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbour outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled by their position."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(vertices), tuple(adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edge_count(g: Graph) -> int:
    return g.edge_count()


@dataclass(frozen=True)
class Bipartition:
    """Outcome of a bipartiteness test.

    Exactly one of ``coloring`` (a proper 2-colouring, one entry per vertex)
    and ``odd_cycle`` (vertex sequence of an odd cycle in the graph) is set.
    """

    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> Bipartition:
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = [root]
        for u in queue:
            for v in iter_bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return Bipartition(False, odd_cycle=_tree_cycle(u, v, parent, depth))
    return Bipartition(True, coloring=tuple(color))


def _tree_cycle(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u, v are BFS-tree vertices at equal-parity depth joined by a non-tree edge
    left, right = [u], [v]
    while u != v:
        if depth[u] >= depth[v]:
            u = parent[u]
            left.append(u)
        else:
            v = parent[v]
            right.append(v)
    # both lists now end with the common ancestor
    return tuple(left + right[-2::-1])


def component_mask(g: Graph, start: int, allowed: int | None = None) -> int:
    """Vertices reachable from ``start`` using only vertices in ``allowed``."""
    if allowed is None:
        allowed = g.vertex_mask
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g, 0) == g.vertex_mask


def components(g: Graph) -> list[list[int]]:
    left = g.vertex_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = component_mask(g, start, left)
        out.append(list(iter_bits(comp)))
        left &= ~comp
    return out


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]

    @property
    def s(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> list[int]:
        return sorted((len(b) for b in self.blocks), reverse=True)


def _biconnected(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Iterative Hopcroft-Tarjan over every component."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter_bits(g.adj[root]))]
        while stack:
            u, par, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] < 0:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter_bits(g.adj[v])))
                    advanced = True
                    break
                if v != par and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if par < 0:
                continue
            low[par] = min(low[par], low[u])
            if low[u] >= disc[par]:
                if par != root:
                    cuts.add(par)
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (par, u):
                        break
                blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    if not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")
    blocks, cuts = _biconnected(g)
    blocks.sort(key=lambda b: (-len(b), sorted(b)))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def cut_vertices(g: Graph) -> frozenset[int]:
    return frozenset(_biconnected(g)[1])


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not _biconnected(g)[1]

"""Builders for the named graph families, with fixed deterministic labellings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import MAX_VERTICES, Graph, from_edges


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:]]


def complete(n: int) -> Graph:
    _require(1 <= n <= MAX_VERTICES, f"need 1 <= n <= {MAX_VERTICES}, got {n}")
    return from_edges(n, _clique_edges(list(range(n))))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices 0..a-1."""
    _require(a >= 1 and b >= 1 and a + b <= MAX_VERTICES, f"bad part sizes ({a}, {b})")
    return from_edges(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def turan(n: int, p: int) -> Graph:
    """Complete p-partite graph with parts as equal as possible, larger parts first."""
    _require(1 <= p <= n <= MAX_VERTICES, f"need 1 <= p <= n <= {MAX_VERTICES}, got n={n}, p={p}")
    q, rem = divmod(n, p)
    part = []
    for i in range(p):
        part += [i] * (q + 1 if i < rem else q)
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


@dataclass(frozen=True)
class CactusSpec:
    """Block sizes of a cactus whose blocks are cliques."""

    block_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "block_sizes", tuple(self.block_sizes))
        _require(len(self.block_sizes) >= 1, "a cactus needs at least one block")
        _require(all(b >= 2 for b in self.block_sizes), f"block sizes must be >= 2, got {self.block_sizes}")

    @property
    def n(self) -> int:
        return 1 + sum(b - 1 for b in self.block_sizes)

    @property
    def s(self) -> int:
        return len(self.block_sizes)


def cactus(spec: CactusSpec | tuple[int, ...] | list[int]) -> Graph:
    """Cliques of the given sizes glued at the hub vertex 0, otherwise disjoint."""
    if not isinstance(spec, CactusSpec):
        spec = CactusSpec(tuple(spec))
    _require(spec.n <= MAX_VERTICES, f"cactus has {spec.n} vertices, limit is {MAX_VERTICES}")
    edges = []
    nxt = 1
    for size in spec.block_sizes:
        block = [0] + list(range(nxt, nxt + size - 1))
        edges += _clique_edges(block)
        nxt += size - 1
    return from_edges(spec.n, edges)


def h1_graph(n: int, k: int) -> Graph:
    """K_k on 0..k-1 joined to an independent set on k..n-1."""
    _require(k >= 2 and k <= n <= MAX_VERTICES, f"need 2 <= k <= n <= {MAX_VERTICES}, got n={n}, k={k}")
    edges = _clique_edges(list(range(k)))
    edges += [(u, v) for u in range(k) for v in range(k, n)]
    return from_edges(n, edges)


def h2_graph(n: int, k: int) -> Graph:
    """K_{2k-1} on 0..2k-2 with vertices 0 and 1 joined to every other vertex."""
    _require(k >= 2 and 2 * k + 1 <= n <= MAX_VERTICES, f"need k >= 2 and 2k+1 <= n <= {MAX_VERTICES}, got n={n}, k={k}")
    edges = _clique_edges(list(range(2 * k - 1)))
    edges += [(u, v) for u in (0, 1) for v in range(2 * k - 1, n)]
    return from_edges(n, edges)


@dataclass(frozen=True)
class Complete:
    n: int

    def realize(self) -> Graph:
        return complete(self.n)

    @property
    def label(self) -> str:
        return f"K_{self.n}"


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def realize(self) -> Graph:
        return complete_bipartite(self.a, self.b)

    @property
    def label(self) -> str:
        return f"K_{{{self.a},{self.b}}}"


@dataclass(frozen=True)
class Turan:
    n: int
    p: int = 2

    def realize(self) -> Graph:
        return turan(self.n, self.p)

    @property
    def label(self) -> str:
        return f"T({self.n},{self.p})"


@dataclass(frozen=True)
class Cactus:
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def realize(self) -> Graph:
        return cactus(CactusSpec(self.blocks))

    @property
    def label(self) -> str:
        spec = CactusSpec(self.blocks)
        return f"B({spec.n};{','.join(map(str, self.blocks))})"


@dataclass(frozen=True)
class H1:
    n: int
    k: int

    def realize(self) -> Graph:
        return h1_graph(self.n, self.k)

    @property
    def label(self) -> str:
        return f"H1({self.n},{self.k})"


@dataclass(frozen=True)
class H2:
    n: int
    k: int

    def realize(self) -> Graph:
        return h2_graph(self.n, self.k)

    @property
    def label(self) -> str:
        return f"H2({self.n},{self.k})"


ConstructionSpec = Union[Complete, CompleteBipartite, Turan, Cactus, H1, H2]


def realize(spec: ConstructionSpec) -> Graph:
    return spec.realize()

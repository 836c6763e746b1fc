"""Exhaustive search for C_{2k+1}-free graphs with the most edges.

Two exact engines are provided.

``levels`` (default) builds graphs one vertex at a time, always adding a
vertex of minimum degree.  Deleting a minimum-degree vertex from an m-vertex
graph with e edges loses at most floor(2e/m) edges, so every n-vertex graph
with at least L edges is reached through graphs whose edge counts stay above
a threshold chain f(n) = L, f(m-1) = f(m) - floor(2 f(m) / m).  Each level is
reduced to one canonical representative per isomorphism class.  A new vertex
may be joined to a set S only if no two vertices of S are the ends of a path
with 2k - 1 edges; otherwise a C_{2k+1} would appear.

``pairs`` decides vertex pairs in lexicographic order, adding an edge only
when no path with exactly 2k edges already joins its ends, and cuts a branch
when even taking every undecided pair cannot reach the best count.  It is
only practical for small n and serves as an independent cross-check.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .canon import CANON_LIMIT, CanonicalForm, canonical_form
from .cycles import has_cycle_of_length, has_path_of_length, path_endpoint_masks
from .formulas import ex_odd_cycle, extremal_family, mantel
from .graph import Graph, iter_bits
from .graph6 import g6_encode

log = logging.getLogger(__name__)

ENUMERATE_CAP = 9
SEARCH_CAP = CANON_LIMIT
DEFAULT_NODE_LIMIT = 50_000_000
NODE_LIMIT_ENV = "EXCYCLE_NODE_LIMIT"


class NodeLimitExceeded(RuntimeError):
    pass


def default_node_limit() -> int:
    raw = os.environ.get(NODE_LIMIT_ENV)
    if raw:
        value = int(raw)
        if value <= 0:
            raise ValueError(f"{NODE_LIMIT_ENV} must be positive, got {raw!r}")
        return value
    return DEFAULT_NODE_LIMIT


# ---------------------------------------------------------------------------
# vertex extension


def _extensions(
    adj: tuple[int, ...],
    need: int,
    conflict: list[int] | None,
) -> Iterator[int]:
    """Neighbourhoods S for a new vertex that keep it of minimum degree.

    Yields masks S with |S| >= need, S independent in ``conflict`` (if
    given), and every old vertex ending with degree >= |S|.
    """
    m = len(adj)
    deg = [row.bit_count() for row in adj]
    lo = max(need, 0)
    hi = min(m, min(deg, default=0) + 1)
    for t in range(lo, hi + 1):
        forced = 0
        ok = True
        for v in range(m):
            if deg[v] < t:
                if deg[v] < t - 1:
                    ok = False
                    break
                forced |= 1 << v
        if not ok:
            break
        if forced.bit_count() > t:
            continue
        blocked = 0
        if conflict is not None:
            for v in iter_bits(forced):
                blocked |= conflict[v]
            if blocked & forced:
                continue
        cand = ((1 << m) - 1) & ~forced & ~blocked
        yield from _choose(forced, cand, t - forced.bit_count(), conflict)


def _choose(chosen: int, cand: int, r: int, conflict: list[int] | None) -> Iterator[int]:
    if r == 0:
        yield chosen
        return
    while cand and cand.bit_count() >= r:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        rest = cand & ~conflict[v] if conflict is not None else cand
        yield from _choose(chosen | low, rest, r - 1, conflict)


def _extend_parent(
    adj: tuple[int, ...], edges: int, need_total: int, forbidden_len: int | None
) -> tuple[dict[CanonicalForm, None], int]:
    """Canonical forms of all admissible one-vertex extensions of one parent."""
    m = len(adj)
    conflict = path_endpoint_masks(adj, forbidden_len) if forbidden_len else None
    out: dict[CanonicalForm, None] = {}
    nodes = 0
    new_bit = 1 << m
    for s in _extensions(adj, need_total - edges, conflict):
        nodes += 1
        child = tuple(row | new_bit if s >> v & 1 else row for v, row in enumerate(adj)) + (s,)
        out[canonical_form(Graph(m + 1, child), limit=64)] = None
    return out, nodes


def _extend_chunk(args) -> tuple[list[CanonicalForm], int]:
    parents, need_total, forbidden_len = args
    found: dict[CanonicalForm, None] = {}
    nodes = 0
    for adj, edges in parents:
        part, cnt = _extend_parent(adj, edges, need_total, forbidden_len)
        found.update(part)
        nodes += cnt
    return list(found), nodes


def threshold_chain(n: int, lower: int) -> list[int]:
    """``f[m]`` = minimum edge count of the m-vertex ancestors of an n-vertex graph with ``lower`` edges."""
    f = [0] * (n + 1)
    f[n] = max(lower, 0)
    for m in range(n, 1, -1):
        f[m - 1] = max(f[m] - (2 * f[m]) // m, 0)
    return f


@dataclass
class _LevelRun:
    levels: list[list[CanonicalForm]]
    nodes: int


def _run_levels(
    n: int,
    thresholds: list[int],
    forbidden_len: int | None,
    node_limit: int,
    workers: int = 1,
) -> _LevelRun:
    level = [canonical_form(Graph(1, (0,)))]
    history: list[list[CanonicalForm]] = [[], level]
    nodes = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for m in range(1, n):
            parents = [(cf.graph().adj, len(cf.edges)) for cf in level]
            need = thresholds[m + 1]
            if pool is None:
                chunks = [(parents, need, forbidden_len)]
                results = map(_extend_chunk, chunks)
            else:
                size = max(1, len(parents) // (workers * 8))
                chunks = [(parents[i:i + size], need, forbidden_len) for i in range(0, len(parents), size)]
                results = pool.map(_extend_chunk, chunks)
            found: set[CanonicalForm] = set()
            for forms, cnt in results:
                found.update(forms)
                nodes += cnt
                if nodes > node_limit:
                    raise NodeLimitExceeded(f"node limit {node_limit} exceeded at level {m + 1}")
            level = sorted(found)
            history.append(level)
            log.debug("level %d: %d classes, %d nodes so far", m + 1, len(level), nodes)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return _LevelRun(history, nodes)


def enumerate_graphs(n: int, cap: int = ENUMERATE_CAP) -> Iterator[Graph]:
    """One graph per isomorphism class on n vertices, in canonical-code order."""
    if not 1 <= n <= cap:
        raise ValueError(f"enumeration supports 1 <= n <= {cap}, got {n}")
    run = _run_levels(n, [0] * (n + 1), None, node_limit=1 << 62)
    for cf in run.levels[n]:
        yield cf.graph()


# ---------------------------------------------------------------------------
# pairwise branch and bound


def _pair_search(n: int, k: int, lower: int, node_limit: int) -> tuple[int, set[CanonicalForm], int]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    total = len(pairs)
    adj = [0] * n
    best = lower
    optima: set[CanonicalForm] = set()
    nodes = 0
    path_len = 2 * k

    def legal(u: int, v: int) -> bool:
        return not has_path_of_length(Graph(n, tuple(adj)), u, v, path_len)

    def rec(i: int, edges: int) -> None:
        nonlocal best, nodes, optima
        nodes += 1
        if nodes > node_limit:
            raise NodeLimitExceeded(f"node limit {node_limit} exceeded")
        if edges + (total - i) < best:
            return
        if i == total:
            if edges > best:
                best = edges
                optima = set()
            optima.add(canonical_form(Graph(n, tuple(adj)), limit=64))
            return
        u, v = pairs[i]
        if legal(u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rec(i + 1, edges + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        rec(i + 1, edges)

    rec(0, 0)
    return best, optima, nodes


# ---------------------------------------------------------------------------
# reports


@dataclass
class SearchConfig:
    n: int
    k: int
    collect_all: bool = True
    initial_lower_bound: int | None = None
    worker_count: int = 1
    node_limit: int = field(default_factory=default_node_limit)
    strategy: str = "levels"

    def __post_init__(self) -> None:
        if not 1 <= self.n <= SEARCH_CAP:
            raise ValueError(f"search supports 1 <= n <= {SEARCH_CAP}, got {self.n}")
        if self.k < 1:
            raise ValueError(f"need k >= 1, got {self.k}")
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.worker_count < 1:
            raise ValueError("worker_count must be >= 1")
        if self.strategy not in ("levels", "pairs"):
            raise ValueError(f"unknown strategy {self.strategy!r}")


@dataclass
class ExtremalReport:
    n: int
    k: int
    optimum: int | None
    extremal_graphs: list[CanonicalForm]
    nodes_explored: int
    elapsed: float
    lower_bound: int
    complete: bool
    verdict: dict[str, bool | None]
    strategy: str = "levels"
    level_sizes: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "strategy": self.strategy,
            "complete": self.complete,
            "optimum": self.optimum,
            "lower_bound": self.lower_bound,
            "extremal_count": len(self.extremal_graphs),
            "extremal_graphs": [g6_encode(cf.graph()) for cf in self.extremal_graphs],
            "nodes_explored": self.nodes_explored,
            "level_sizes": self.level_sizes,
            "verdict": self.verdict,
        }


def expected_family_forms(n: int, k: int) -> set[CanonicalForm]:
    from .constructions import complete_bipartite

    if k == 1:
        return {canonical_form(complete_bipartite((n + 1) // 2, n // 2), limit=64)} if n >= 2 else {
            canonical_form(Graph(1, (0,)))
        }
    return {canonical_form(spec.realize(), limit=64) for spec in extremal_family(n, k)}


def seed_lower_bound(n: int, k: int) -> int:
    """Best edge count among the known constructions that check out as C_{2k+1}-free."""
    best = mantel(n)
    if k >= 2:
        for spec in extremal_family(n, k):
            g = spec.realize()
            if not has_cycle_of_length(g, 2 * k + 1):
                best = max(best, g.edge_count())
    return best


def max_edges_c2k1_free(config: SearchConfig) -> ExtremalReport:
    n, k = config.n, config.k
    start = time.perf_counter()
    lower = config.initial_lower_bound
    if lower is None:
        lower = seed_lower_bound(n, k)
    forbidden = 2 * k + 1
    complete = True
    optimum: int | None = None
    forms: list[CanonicalForm] = []
    nodes = 0
    level_sizes: list[int] = []
    try:
        if config.strategy == "pairs":
            best, found, nodes = _pair_search(n, k, lower, config.node_limit)
            if found:
                optimum = best
                forms = sorted(found)
        else:
            run = _run_levels(
                n,
                threshold_chain(n, lower),
                forbidden - 2 if forbidden <= n else None,
                config.node_limit,
                config.worker_count,
            )
            nodes = run.nodes
            level_sizes = [len(lv) for lv in run.levels[1:]]
            final = run.levels[n]
            if final:
                optimum = max(len(cf.edges) for cf in final)
                forms = [cf for cf in final if len(cf.edges) == optimum]
    except NodeLimitExceeded as exc:
        log.warning("%s", exc)
        complete = False
    if not config.collect_all:
        forms = forms[:1]

    verdict: dict[str, bool | None] = {"value_matches": None, "family_matches": None}
    if complete and optimum is not None:
        verdict["value_matches"] = optimum == ex_odd_cycle(n, k)
        if config.collect_all:
            verdict["family_matches"] = set(forms) == expected_family_forms(n, k)
    return ExtremalReport(
        n=n,
        k=k,
        optimum=optimum if complete else None,
        extremal_graphs=forms if complete else [],
        nodes_explored=nodes,
        elapsed=time.perf_counter() - start,
        lower_bound=lower,
        complete=complete,
        verdict=verdict,
        strategy=config.strategy,
        level_sizes=level_sizes,
    )

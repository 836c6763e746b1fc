"""Closed-form edge counts for odd-cycle-free extremal graphs."""

from __future__ import annotations

from dataclasses import dataclass


def binom2(a: int) -> int:
    return a * (a - 1) // 2 if a >= 2 else 0


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def turan_edges(n: int, p: int) -> int:
    """Edges of the complete p-partite graph with near-equal parts."""
    _require(1 <= p <= n, f"need 1 <= p <= n, got n={n}, p={p}")
    q, rem = divmod(n, p)
    sizes = [q + 1] * rem + [q] * (p - rem)
    return binom2(n) - sum(binom2(a) for a in sizes)


def mantel(n: int) -> int:
    return n * n // 4


@dataclass(frozen=True)
class GDecomposition:
    """``n = (s - 1)(2k - 1) + r`` with ``s >= 1`` and ``2 <= r <= 2k``."""

    s: int
    r: int


def g_decompose(n: int, k: int) -> GDecomposition:
    _require(n >= 2, f"need n >= 2, got {n}")
    _require(k >= 2, f"need k >= 2, got {k}")
    q, r = divmod(n - 2, 2 * k - 1)
    return GDecomposition(s=q + 1, r=r + 2)


def g_formula(n: int, k: int) -> int:
    """Largest cactus of complete blocks on n vertices with no C_{2k+1}."""
    d = g_decompose(n, k)
    return (d.s - 1) * binom2(2 * k) + binom2(d.r)


def h1_formula(n: int, k: int) -> int:
    _require(k >= 2 and n >= k, f"need n >= k >= 2, got n={n}, k={k}")
    return binom2(k) + k * (n - k)


def h2_formula(n: int, k: int) -> int:
    _require(k >= 2 and n >= 2 * k + 1, f"need k >= 2 and n >= 2k+1, got n={n}, k={k}")
    return binom2(2 * k - 1) + 2 * (n - 2 * k + 1)


def ex_matching(n: int, nu: int) -> int:
    """Most edges in an n-vertex graph with no matching of size nu + 1."""
    _require(n >= 1 and nu >= 0, f"need n >= 1 and nu >= 0, got n={n}, nu={nu}")
    if 2 * nu + 2 > n:
        # no room for nu + 1 disjoint edges
        return binom2(n)
    return max(binom2(2 * nu + 1), binom2(nu) + nu * (n - nu))


def ex_odd_cycle(n: int, k: int) -> int:
    """Most edges in an n-vertex graph without a cycle of length 2k + 1."""
    _require(n >= 1 and k >= 1, f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if k == 1:
        return mantel(n)
    if n <= 2 * k:
        return binom2(n)
    if n >= 4 * k - 2:
        value = mantel(n)
        if n <= 4 * k - 1:
            assert g_formula(n, k) == value, (n, k)
        return value
    return g_formula(n, k)


def extremal_family(n: int, k: int) -> list:
    """Constructions attaining ``ex_odd_cycle(n, k)``, one per isomorphism class.

    Returned specs are from :mod:`excycle.constructions`, in the order
    complete graph, cactus, H1, complete bipartite graph.
    """
    from .canon import CANON_LIMIT, canonical_form
    from .constructions import Cactus, Complete, CompleteBipartite, H1
    from .graph import block_decomposition

    _require(n >= 1 and k >= 2, f"need n >= 1 and k >= 2, got n={n}, k={k}")
    specs: list = []
    if n <= 2 * k:
        specs.append(Complete(n))
    if 2 * k + 1 <= n <= 4 * k - 1:
        specs.append(Cactus((2 * k, n - 2 * k + 1)))
    if n in (3 * k - 1, 3 * k):
        specs.append(H1(n, k))
    if n >= 4 * k - 2:
        specs.append(CompleteBipartite((n + 1) // 2, n // 2))

    def key(spec):
        g = spec.realize()
        if n <= CANON_LIMIT:
            return canonical_form(g)
        # beyond the canonical limit the listed families differ in these invariants
        return (tuple(sorted(g.degrees())), tuple(block_decomposition(g).block_sizes()))

    seen = set()
    out = []
    for spec in specs:
        kk = key(spec)
        if kk not in seen:
            seen.add(kk)
            out.append(spec)
    return out
